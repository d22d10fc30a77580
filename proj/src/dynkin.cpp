#include "braidforms/dynkin.hpp"

#include <algorithm>

namespace braidforms {

std::string to_string(const DynkinType& t) {
  switch (t.cls) {
    case DynkinClass::A: return "A" + std::to_string(t.rank);
    case DynkinClass::D: return "D" + std::to_string(t.rank);
    case DynkinClass::E6: return "E6";
    case DynkinClass::E7: return "E7";
    case DynkinClass::E8: return "E8";
    case DynkinClass::AffD4: return "affD4";
    case DynkinClass::AffE6: return "affE6";
    case DynkinClass::AffE7: return "affE7";
    case DynkinClass::AffE8: return "affE8";
    case DynkinClass::Other: return "other";
  }
  return "other";
}

namespace {

// Length in edges of the path hanging off `start` away from `center`;
// -1 when the walk hits a branch point (degree >= 3).
int leg_length(const LinkingGraph& g, int center, int start) {
  int len = 1;
  int prev = center, v = start;
  while (g.adjacency[v].size() == 2) {
    int next = (g.adjacency[v][0] == prev) ? g.adjacency[v][1] : g.adjacency[v][0];
    prev = v;
    v = next;
    ++len;
  }
  return g.adjacency[v].size() == 1 ? len : -1;
}

}  // namespace

DynkinType identify(const LinkingGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return {DynkinClass::A, 0};
  if (g.edge_count() != n - 1) return {DynkinClass::Other, n};  // cycle (connected input)

  std::vector<int> branch;
  for (int v = 0; v < n; ++v)
    if (g.adjacency[v].size() >= 3) branch.push_back(v);

  if (branch.empty()) return {DynkinClass::A, n};
  if (branch.size() > 1) return {DynkinClass::Other, n};

  int c = branch[0];
  if (g.adjacency[c].size() == 4) {
    for (int u : g.adjacency[c])
      if (g.adjacency[u].size() != 1) return {DynkinClass::Other, n};
    return {DynkinClass::AffD4, n};
  }
  if (g.adjacency[c].size() != 3) return {DynkinClass::Other, n};

  std::vector<int> legs;
  for (int u : g.adjacency[c]) {
    int len = leg_length(g, c, u);
    if (len < 0) return {DynkinClass::Other, n};
    legs.push_back(len);
  }
  std::sort(legs.begin(), legs.end());
  auto is = [&](int a, int b, int cc) { return legs[0] == a && legs[1] == b && legs[2] == cc; };
  if (legs[0] == 1 && legs[1] == 1) return {DynkinClass::D, n};
  if (is(1, 2, 2)) return {DynkinClass::E6, n};
  if (is(1, 2, 3)) return {DynkinClass::E7, n};
  if (is(1, 2, 4)) return {DynkinClass::E8, n};
  if (is(2, 2, 2)) return {DynkinClass::AffE6, n};
  if (is(1, 3, 3)) return {DynkinClass::AffE7, n};
  if (is(1, 2, 5)) return {DynkinClass::AffE8, n};
  return {DynkinClass::Other, n};
}

const char* to_string(MinorTarget t) {
  switch (t) {
    case MinorTarget::T: return "T";
    case MinorTarget::E: return "E";
    case MinorTarget::X: return "X";
    case MinorTarget::Y: return "Y";
  }
  return "?";
}

std::optional<MinorTarget> is_affine_forbidden(const LinkingGraph& g) {
  switch (identify(g).cls) {
    case DynkinClass::AffE7: return MinorTarget::T;
    case DynkinClass::AffE8: return MinorTarget::E;
    case DynkinClass::AffD4: return MinorTarget::X;
    case DynkinClass::AffE6: return MinorTarget::Y;
    default: return std::nullopt;
  }
}

DynkinType target_tree_type(MinorTarget t) {
  switch (t) {
    case MinorTarget::T: return {DynkinClass::AffE7, 8};
    case MinorTarget::E: return {DynkinClass::AffE8, 9};
    case MinorTarget::X: return {DynkinClass::AffD4, 5};
    case MinorTarget::Y: return {DynkinClass::AffE6, 7};
  }
  return {DynkinClass::Other, 0};
}

int target_betti(MinorTarget t) { return target_tree_type(t).rank; }

}  // namespace braidforms
