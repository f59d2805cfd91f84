#include <bit>
#include <cstdint>

#include "linkwidth/errors.hpp"
#include "linkwidth/width.hpp"

namespace linkwidth {

CheegerResult graph_cheeger(const Graph& g) {
  int n = g.n;
  if (n < 2) throw Error(Errc::DomainError, "Cheeger constant needs at least 2 vertices");
  if (n > 24) throw Error(Errc::TooLarge, "Cheeger constant needs at most 24 vertices");

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

  Rational best = Rational::make(1, 0);  // infinity
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 1; mask < full; mask++) {
    int size = std::popcount(mask);
    if (2 * size > n) continue;
    Rational h = Rational::make(cut[mask], size);
    if (h < best) {
      best = h;
      best_mask = mask;
    }
  }

  CheegerResult out;
  out.h = best;
  for (int v = 0; v < n; v++) {
    if (best_mask >> v & 1) out.witness.push_back(v);
  }
  return out;
}

}  // namespace linkwidth
