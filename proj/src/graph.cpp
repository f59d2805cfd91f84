#include "linkwidth/graph.hpp"

#include <algorithm>

namespace linkwidth {

std::vector<std::vector<std::pair<int, int>>> Graph::neighbor_multiplicities() const {
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (auto [a, b] : edges) {
    if (a == b) continue;
    adj[a].push_back({b, 1});
    adj[b].push_back({a, 1});
  }
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
    std::size_t out = 0;
    for (std::size_t i = 0; i < row.size();) {
      std::size_t j = i;
      int mult = 0;
      while (j < row.size() && row[j].first == row[i].first) {
        mult += row[j].second;
        j++;
      }
      row[out++] = {row[i].first, mult};
      i = j;
    }
    row.resize(out);
  }
  return adj;
}

}  // namespace linkwidth
