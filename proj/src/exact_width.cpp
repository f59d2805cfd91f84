#include <algorithm>
#include <bit>
#include <cstdint>

#include "linkwidth/errors.hpp"
#include "linkwidth/width.hpp"

namespace linkwidth {

// Subset DP over prefixes: cut[mask] is the boundary of mask, s[mask] the
// best achievable max-cut when mask is already placed. O(2^v * v) time.
ExactWidth exact_width(const Graph& g) {
  int n = g.n;
  if (n > 20) throw Error(Errc::TooLarge, "exact width needs at most 20 vertices");
  ExactWidth out;
  if (n == 0) return out;

  std::vector<std::vector<int>> adj(n);
  for (auto [u, w] : g.edges) {
    if (u == w) continue;
    adj[u].push_back(w);
    adj[w].push_back(u);
  }

  std::uint32_t full = (1u << n) - 1;
  std::vector<int> cut(full + 1, 0);
  for (std::uint32_t mask = 1; mask <= full; mask++) {
    int v = std::countr_zero(mask);
    std::uint32_t rest = mask & (mask - 1);
    int c = cut[rest];
    for (int w : adj[v]) c += (rest >> w & 1) ? -1 : 1;
    cut[mask] = c;
  }

  std::vector<int> s(full + 1, 0);
  for (std::uint32_t mask = full; mask-- > 0;) {
    int best = INT32_MAX;
    for (int v = 0; v < n; v++) {
      if (mask >> v & 1) continue;
      std::uint32_t next = mask | (1u << v);
      best = std::min(best, std::max(cut[next], s[next]));
    }
    s[mask] = best;
  }

  out.width = s[0];
  std::uint32_t mask = 0;
  while (mask != full) {
    for (int v = 0; v < n; v++) {
      if (mask >> v & 1) continue;
      std::uint32_t next = mask | (1u << v);
      if (std::max(cut[next], s[next]) == s[mask]) {
        out.ordering.push_back(v);
        mask = next;
        break;
      }
    }
  }
  return out;
}

}  // namespace linkwidth
