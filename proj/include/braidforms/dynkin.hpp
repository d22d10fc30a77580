#pragma once

#include <optional>
#include <string>

#include "braidforms/brick.hpp"

namespace braidforms {

enum class DynkinClass { A, D, E6, E7, E8, AffD4, AffE6, AffE7, AffE8, Other };

struct DynkinType {
  DynkinClass cls = DynkinClass::Other;
  int rank = 0;  // vertex count; meaningful for every class except Other

  bool operator==(const DynkinType&) const = default;
  bool spherical() const {
    return cls == DynkinClass::A || cls == DynkinClass::D || cls == DynkinClass::E6 ||
           cls == DynkinClass::E7 || cls == DynkinClass::E8;
  }
  bool affine() const {
    return cls == DynkinClass::AffD4 || cls == DynkinClass::AffE6 ||
           cls == DynkinClass::AffE7 || cls == DynkinClass::AffE8;
  }
};

std::string to_string(const DynkinType& t);  // "A5", "D7", "E8", "affD4", "other"

// Classify a connected graph by tree shape and leg lengths. Anything outside
// the spherical/affine simply laced list is Other.
DynkinType identify(const LinkingGraph& g);

// The four forbidden minors, named by their affine linking trees:
// T ~ affE7, E ~ affE8, X ~ affD4, Y ~ affE6.
enum class MinorTarget { T, E, X, Y };

const char* to_string(MinorTarget t);
std::optional<MinorTarget> is_affine_forbidden(const LinkingGraph& g);
DynkinType target_tree_type(MinorTarget t);
int target_betti(MinorTarget t);  // vertex count of the affine tree

}  // namespace braidforms
