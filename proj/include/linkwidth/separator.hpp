#pragma once

#include <vector>

#include "linkwidth/combinatorial_map.hpp"

namespace linkwidth {

// Planar separator output. The three lists are sorted ascending and
// partition the vertex set; no edge joins part1 to part2, |s| never exceeds
// sqrt(8 n), and each part holds at most 2n/3 vertices.
struct SeparatorResult {
  std::vector<int> s;
  std::vector<int> part1;
  std::vector<int> part2;
};

SeparatorResult separate(const CombinatorialMap& m);

// Induced sub-map on the given vertices, rotations restricted. Optional
// new_to_old receives, per new vertex id, the id it had in m.
CombinatorialMap restrict_map(const CombinatorialMap& m, const std::vector<int>& keep,
                              std::vector<int>* new_to_old = nullptr);

}  // namespace linkwidth
