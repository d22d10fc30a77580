#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "braidforms/brick.hpp"

namespace braidforms {

using BigInt = boost::multiprecision::cpp_int;

// Exact integer symmetric matrix. Forms built from linking graphs have
// diagonal 2 and off-diagonal entries in {0, +1, -1}; after the spanning-
// forest sign normalization every forest edge reads +1, so tree graphs
// reproduce the Cartan matrices verbatim.
struct SymForm {
  int dim = 0;
  std::vector<int> entries;  // row-major dim*dim

  int at(int i, int j) const { return entries[static_cast<std::size_t>(i) * dim + j]; }
  void set(int i, int j, int v) {
    entries[static_cast<std::size_t>(i) * dim + j] = v;
    entries[static_cast<std::size_t>(j) * dim + i] = v;
  }
  static SymForm zero(int d) { return {d, std::vector<int>(static_cast<std::size_t>(d) * d, 0)}; }
  bool operator==(const SymForm&) const = default;
};

struct Inertia {
  int n_plus = 0;
  int n_zero = 0;
  int n_minus = 0;
  bool operator==(const Inertia&) const = default;
};

// Linking sign of two linked bricks, in the paper's +2-diagonal convention:
// same column -1; adjacent columns +1 when the lower column's brick starts
// first, -1 otherwise. Cycle products of these signs are basis-independent
// and are what the unsigned convention gets wrong on words whose linking
// graph contains circuits.
int linking_sign(const Brick& a, const Brick& b);

SymForm symmetrized_form(const LinkingGraph& g);

BigInt determinant(const SymForm& m);  // fraction-free Bareiss; det of 0x0 is 1

bool is_positive_definite(const SymForm& m);  // all leading principal minors > 0

Inertia signature(const SymForm& m);  // exact congruence inertia

std::string to_string(const SymForm& m);  // bracketed integer rows

}  // namespace braidforms
