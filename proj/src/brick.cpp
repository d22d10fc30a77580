#include "braidforms/brick.hpp"

#include <algorithm>
#include <map>

namespace braidforms {

std::vector<Brick> bricks(const BraidWord& w) {
  std::vector<std::vector<int>> occ(w.strands);
  for (int p = 0; p < w.length(); ++p) occ[w.letters[p] - 1].push_back(p + 1);
  std::vector<Brick> out;
  for (int c = 1; c < w.strands; ++c) {
    const auto& o = occ[c - 1];
    for (std::size_t k = 0; k + 1 < o.size(); ++k)
      out.push_back({c, o[k], o[k + 1]});
  }
  return out;
}

bool linked(const Brick& a, const Brick& b) {
  if (a.column == b.column)
    return a.end == b.start || b.end == a.start;
  if (std::abs(a.column - b.column) != 1) return false;
  return (a.start < b.start && b.start < a.end && a.end < b.end) ||
         (b.start < a.start && a.start < b.end && b.end < a.end);
}

LinkingGraph linking_graph(const BraidWord& w) {
  LinkingGraph g;
  g.vertices = bricks(w);
  const int n = g.vertex_count();
  g.adjacency.assign(n, {});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (linked(g.vertices[i], g.vertices[j])) {
        g.edges.push_back({i, j});
        g.adjacency[i].push_back(j);
        g.adjacency[j].push_back(i);
      }
  return g;
}

std::vector<std::vector<int>> graph_components(const LinkingGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : g.adjacency[v])
        if (comp[u] < 0) {
          comp[u] = ncomp;
          stack.push_back(u);
        }
    }
    ++ncomp;
  }
  std::vector<std::vector<int>> out(ncomp);
  for (int v = 0; v < n; ++v) out[comp[v]].push_back(v);
  return out;
}

namespace {

struct CanonState {
  const std::vector<std::vector<int>>* adj;
  int n;
  std::string best;
  bool have_best = false;

  // Refine colors to a stable equitable partition.
  std::vector<int> refine(std::vector<int> color) const {
    for (;;) {
      std::vector<std::pair<int, std::vector<int>>> sig(n);
      for (int v = 0; v < n; ++v) {
        std::vector<int> nb;
        for (int u : (*adj)[v]) nb.push_back(color[u]);
        std::sort(nb.begin(), nb.end());
        sig[v] = {color[v], std::move(nb)};
      }
      std::map<std::pair<int, std::vector<int>>, int> order;
      for (int v = 0; v < n; ++v) order[sig[v]];
      int next = 0;
      for (auto& [key, idx] : order) idx = next++;
      std::vector<int> fresh(n);
      bool changed = false;
      for (int v = 0; v < n; ++v) {
        fresh[v] = order[sig[v]];
        if (fresh[v] != color[v]) changed = true;
      }
      color = std::move(fresh);
      if (!changed) return color;
    }
  }

  std::string encode(const std::vector<int>& perm) const {
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
    std::string s;
    s.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      std::vector<char> row(n, '0');
      for (int u : (*adj)[perm[i]]) row[inv[u]] = '1';
      s.append(row.begin(), row.end());
    }
    return s;
  }

  void search(std::vector<int> color) {
    color = refine(color);
    // Smallest non-singleton color class.
    int target = -1, target_size = n + 1;
    std::vector<int> count(n, 0);
    for (int v = 0; v < n; ++v) ++count[color[v]];
    for (int c = 0; c < n; ++c)
      if (count[c] > 1 && count[c] < target_size) {
        target = c;
        target_size = count[c];
      }
    if (target < 0) {
      std::vector<int> perm(n);
      std::vector<std::pair<int, int>> order;
      for (int v = 0; v < n; ++v) order.push_back({color[v], v});
      std::sort(order.begin(), order.end());
      for (int i = 0; i < n; ++i) perm[i] = order[i].second;
      std::string s = encode(perm);
      if (!have_best || s < best) {
        best = std::move(s);
        have_best = true;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (color[v] != target) continue;
      std::vector<int> next = color;
      for (int u = 0; u < n; ++u)
        if (next[u] > target || (next[u] == target && u != v)) ++next[u];
      search(std::move(next));
    }
  }
};

}  // namespace

std::string canonical_graph(const LinkingGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return "V0:";
  std::vector<std::vector<int>> adj = g.adjacency;
  CanonState st{&adj, n, {}, false};
  st.search(std::vector<int>(n, 0));
  return "V" + std::to_string(n) + ":" + st.best;
}

}  // namespace braidforms
