#pragma once

#include <vector>

#include "linkwidth/combinatorial_map.hpp"

namespace linkwidth {

// One twist region: the crossings of a maximal connected union of bigon
// faces (in chain order), or a single crossing touching no bigon.
// `cyclic` is set when the bigon edges close into a cycle (counting parallel
// bigons), `extra_internal` when a non-loop non-bigon edge joins two
// crossings of the block; either one invalidates the +2 lifting argument.
struct TwistBlock {
  std::vector<int> crossings;
  bool has_bigon = false;
  bool cyclic = false;
  bool extra_internal = false;
};

struct TwistDecomposition {
  std::vector<TwistBlock> blocks;
  std::vector<int> block_of;
  std::vector<std::pair<int, int>> diagram_edges;

  int t() const { return static_cast<int>(blocks.size()); }
  int crossing_count() const { return static_cast<int>(block_of.size()); }
  bool any_degenerate() const {
    for (const auto& b : blocks)
      if (b.cyclic || b.extra_internal) return true;
    return false;
  }
};

TwistDecomposition twist_decomposition(const CombinatorialMap& m, const FaceSet& fs);

// Collapsed diagram: vertex i is block i of the decomposition; edges are the
// diagram edges not bounding a bigon, with inherited rotations.
struct TwistGraph {
  CombinatorialMap map;
  std::vector<int> edge_origin;
};

TwistGraph twist_graph(const TwistDecomposition& td, const CombinatorialMap& m);

}  // namespace linkwidth
