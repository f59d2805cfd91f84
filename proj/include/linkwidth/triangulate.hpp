#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "linkwidth/combinatorial_map.hpp"

namespace linkwidth {

// Drops loops and keeps one edge per vertex pair (the smallest edge id).
CombinatorialMap simplify_map(const CombinatorialMap& m,
                              std::vector<int>* new_to_old_edge = nullptr);

struct TriangulationResult {
  CombinatorialMap map;
  std::vector<std::pair<int, int>> added_edges;
};

// Splits every face of degree > 3 with diagonals; the graph stays simple and
// the vertex set is unchanged. Requires a simple connected spherical map on
// at least 3 vertices.
TriangulationResult triangulate(const CombinatorialMap& m);

// Deterministic spherical triangulation on n vertices grown by repeated
// vertex insertion into a random face.
CombinatorialMap random_triangulation(int n, uint64_t seed);

}  // namespace linkwidth
