#include "braidforms/form.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>
#include <cstdint>

namespace braidforms {

namespace mp = boost::multiprecision;
using Rational = mp::cpp_rational;

int linking_sign(const Brick& a, const Brick& b) {
  if (a.column == b.column) return -1;
  const Brick& lo = (a.column < b.column) ? a : b;
  const Brick& hi = (a.column < b.column) ? b : a;
  return lo.start < hi.start ? 1 : -1;
}

SymForm symmetrized_form(const LinkingGraph& g) {
  const int n = g.vertex_count();
  SymForm m = SymForm::zero(n);
  for (int i = 0; i < n; ++i) m.set(i, i, 2);

  // Vertex signs from a spanning forest so that forest edges normalize to +1.
  // Non-forest edges keep the cycle-product sign, which is basis independent.
  std::vector<int> sign(n, 0);
  for (int root = 0; root < n; ++root) {
    if (sign[root]) continue;
    sign[root] = 1;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : g.adjacency[v]) {
        if (sign[u]) continue;
        sign[u] = sign[v] * linking_sign(g.vertices[v], g.vertices[u]);
        stack.push_back(u);
      }
    }
  }
  for (auto [i, j] : g.edges)
    m.set(i, j, sign[i] * sign[j] * linking_sign(g.vertices[i], g.vertices[j]));
  return m;
}

namespace {

// int64 stays exact while every intermediate (a minor of the input) respects
// Hadamard's bound; with |entries| <= 2 that covers dim <= 18.
bool small_enough_for_i64(const SymForm& m) {
  if (m.dim > 18) return false;
  for (int v : m.entries)
    if (v < -2 || v > 2) return false;
  return true;
}

// Fraction-free Bareiss with partial pivoting by row swap; exact determinant.
template <typename Int>
Int bareiss_det(const SymForm& m) {
  const int n = m.dim;
  std::vector<Int> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = m.at(i, j);
  auto at = [&](int i, int j) -> Int& { return a[static_cast<std::size_t>(i) * n + j]; };
  Int prev = 1;
  int swaps = 0;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (at(i, k) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(at(piv, j), at(k, j));
      ++swaps;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    prev = at(k, k);
  }
  Int det = at(n - 1, n - 1);
  return (swaps % 2) ? Int(-det) : det;
}

// Leading principal minors d_1..d_n while nonzero (no pivoting; a zero pivot
// ends the run). Returns the count of minors produced.
template <typename Int>
int bareiss_leading_minors(const SymForm& m, std::vector<Int>& minors) {
  const int n = m.dim;
  std::vector<Int> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = m.at(i, j);
  auto at = [&](int i, int j) -> Int& { return a[static_cast<std::size_t>(i) * n + j]; };
  minors.clear();
  Int prev = 1;
  for (int k = 0; k < n; ++k) {
    if (at(k, k) == 0) return k;
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    prev = at(k, k);
    minors.push_back(prev);
  }
  return n;
}

Inertia congruence_inertia(const SymForm& m) {
  const int n = m.dim;
  std::vector<Rational> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = m.at(i, j);
  auto at = [&](int i, int j) -> Rational& { return a[static_cast<std::size_t>(i) * n + j]; };

  Inertia out;
  std::vector<int> live(n);
  for (int i = 0; i < n; ++i) live[i] = i;

  while (!live.empty()) {
    int pick = -1;
    for (std::size_t t = 0; t < live.size(); ++t)
      if (at(live[t], live[t]) != 0) {
        pick = static_cast<int>(t);
        break;
      }
    if (pick >= 0) {
      int p = live[pick];
      Rational d = at(p, p);
      if (d > 0) ++out.n_plus; else ++out.n_minus;
      live.erase(live.begin() + pick);
      for (int i : live) {
        if (at(i, p) == 0) continue;
        Rational f = at(i, p) / d;
        for (int j : live) at(i, j) -= f * at(p, j);
      }
      for (int i : live) at(i, p) = at(p, i) = 0;
      continue;
    }
    // Zero diagonal block: split off a hyperbolic pair if any off-diagonal
    // entry survives, otherwise the rest is kernel.
    int p = -1, q = -1;
    for (std::size_t s = 0; s < live.size() && p < 0; ++s)
      for (std::size_t t = s + 1; t < live.size(); ++t)
        if (at(live[s], live[t]) != 0) {
          p = live[s];
          q = live[t];
          break;
        }
    if (p < 0) {
      out.n_zero += static_cast<int>(live.size());
      break;
    }
    Rational c = at(p, q);
    ++out.n_plus;
    ++out.n_minus;
    live.erase(std::remove(live.begin(), live.end(), p), live.end());
    live.erase(std::remove(live.begin(), live.end(), q), live.end());
    // x_i' = x_i - (a(i,q)/c) x_p - (a(i,p)/c) x_q gives
    // a'(i,j) = a(i,j) - (a(i,p) a(j,q) + a(i,q) a(j,p)) / c.
    std::vector<Rational> col_p, col_q;
    for (int i : live) {
      col_p.push_back(at(i, p));
      col_q.push_back(at(i, q));
    }
    for (std::size_t s = 0; s < live.size(); ++s)
      for (std::size_t t = s; t < live.size(); ++t) {
        Rational v = at(live[s], live[t]) -
                     (col_p[s] * col_q[t] + col_q[s] * col_p[t]) / c;
        at(live[s], live[t]) = v;
        at(live[t], live[s]) = v;
      }
    for (int i : live) {
      at(p, i) = at(i, p) = 0;
      at(q, i) = at(i, q) = 0;
    }
  }
  return out;
}

}  // namespace

BigInt determinant(const SymForm& m) {
  if (m.dim == 0) return 1;
  if (small_enough_for_i64(m)) return BigInt(bareiss_det<std::int64_t>(m));
  return bareiss_det<BigInt>(m);
}

bool is_positive_definite(const SymForm& m) {
  if (m.dim == 0) return true;
  if (small_enough_for_i64(m)) {
    const int n = m.dim;
    std::vector<std::int64_t> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = m.at(i, j);
    auto at = [&](int i, int j) -> std::int64_t& { return a[static_cast<std::size_t>(i) * n + j]; };
    std::int64_t prev = 1;
    for (int k = 0; k < n; ++k) {
      if (at(k, k) <= 0) return false;
      for (int i = k + 1; i < n; ++i)
        for (int j = k + 1; j < n; ++j)
          at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      prev = at(k, k);
    }
    return true;
  }
  std::vector<BigInt> minors;
  int done = bareiss_leading_minors<BigInt>(m, minors);
  if (done < m.dim) return false;
  for (const BigInt& d : minors)
    if (d <= 0) return false;
  return true;
}

Inertia signature(const SymForm& m) {
  if (m.dim == 0) return {0, 0, 0};
  // Jacobi: with all leading principal minors nonzero, n_minus counts the
  // sign changes along 1, d_1, ..., d_n.
  if (small_enough_for_i64(m)) {
    std::vector<std::int64_t> minors;
    if (bareiss_leading_minors<std::int64_t>(m, minors) == m.dim) {
      Inertia out;
      int prev = 1;
      for (std::int64_t d : minors) {
        int s = d > 0 ? 1 : -1;
        if (s != prev) ++out.n_minus; else ++out.n_plus;
        prev = s;
      }
      return out;
    }
  } else {
    std::vector<BigInt> minors;
    if (bareiss_leading_minors<BigInt>(m, minors) == m.dim) {
      Inertia out;
      int prev = 1;
      for (const BigInt& d : minors) {
        int s = d > 0 ? 1 : -1;
        if (s != prev) ++out.n_minus; else ++out.n_plus;
        prev = s;
      }
      return out;
    }
  }
  return congruence_inertia(m);
}

std::string to_string(const SymForm& m) {
  std::string out;
  for (int i = 0; i < m.dim; ++i) {
    out += "[";
    for (int j = 0; j < m.dim; ++j) {
      if (j) out += " ";
      out += std::to_string(m.at(i, j));
    }
    out += "]\n";
  }
  return out;
}

}  // namespace braidforms
