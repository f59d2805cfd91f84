#pragma once

#include <utility>
#include <vector>

namespace linkwidth {

// Abstract multigraph. Parallel edges are kept and count individually in
// boundary sizes; loops are kept but never contribute to a boundary.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }

  // Degree counts darts: a loop adds 2 at its vertex.
  std::vector<int> degrees() const {
    std::vector<int> deg(n, 0);
    for (auto [a, b] : edges) {
      deg[a]++;
      deg[b]++;
    }
    return deg;
  }

  int max_degree() const {
    int best = 0;
    for (int d : degrees())
      if (d > best) best = d;
    return best;
  }

  // adjacency with merged multiplicities, loops skipped
  std::vector<std::vector<std::pair<int, int>>> neighbor_multiplicities() const;
};

}  // namespace linkwidth
