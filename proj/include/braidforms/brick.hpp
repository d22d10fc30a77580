#pragma once

#include <string>
#include <vector>

#include "braidforms/braid.hpp"

namespace braidforms {

// One brick: a pair of consecutive occurrences of sigma_i, identified by the
// two 1-based letter positions that bound it. Positions refer to the linear
// word; bricks never wrap around the closure.
struct Brick {
  int column = 0;
  int start = 0;
  int end = 0;

  bool operator==(const Brick&) const = default;
};

struct LinkingGraph {
  std::vector<Brick> vertices;               // column-major, then by span start
  std::vector<std::pair<int, int>> edges;    // i < j vertex indices
  std::vector<std::vector<int>> adjacency;   // per-vertex neighbour lists

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
};

std::vector<Brick> bricks(const BraidWord& w);

// The linking rule: same column sharing an endpoint, or adjacent columns with
// strictly interleaved spans. Nested or disjoint spans never link.
bool linked(const Brick& a, const Brick& b);

LinkingGraph linking_graph(const BraidWord& w);

// Connected components as vertex-index lists (each sorted ascending).
std::vector<std::vector<int>> graph_components(const LinkingGraph& g);

// Canonical labeling key: equal strings iff the graphs are isomorphic.
// Intended for the small graphs arising here (<= ~30 vertices).
std::string canonical_graph(const LinkingGraph& g);

}  // namespace braidforms
