#include "linkwidth/width.hpp"

#include <algorithm>
#include <functional>

#include "linkwidth/errors.hpp"
#include "linkwidth/separator.hpp"

namespace linkwidth {

namespace {

std::vector<std::vector<int>> adjacency(const Graph& g) {
  std::vector<std::vector<int>> adj(g.n);
  for (auto [u, w] : g.edges) {
    if (u == w) continue;  // loops never cross a cut
    adj[u].push_back(w);
    adj[w].push_back(u);
  }
  return adj;
}

}  // namespace

WidthProfile ordering_width(const Graph& g, const VertexOrdering& phi) {
  if (static_cast<int>(phi.size()) != g.n)
    throw Error(Errc::NotABijection, "ordering has wrong length");
  std::vector<char> seen(g.n, 0);
  for (int v : phi) {
    if (v < 0 || v >= g.n || seen[v])
      throw Error(Errc::NotABijection, "ordering is not a bijection");
    seen[v] = 1;
  }

  auto adj = adjacency(g);
  WidthProfile out;
  out.profile.reserve(g.n);
  std::vector<char> placed(g.n, 0);
  int cur = 0;
  for (int v : phi) {
    for (int w : adj[v]) cur += placed[w] ? -1 : 1;
    placed[v] = 1;
    out.profile.push_back(cur);
    out.width = std::max(out.width, cur);
    out.sumWidth += cur;
  }
  out.lexWidth = out.profile;
  std::sort(out.lexWidth.begin(), out.lexWidth.end(), std::greater<int>());
  return out;
}

namespace {

void order_rec(const CombinatorialMap& m, std::vector<int>& out) {
  if (m.vertex_count == 0) return;
  if (m.vertex_count == 1) {
    out.push_back(0);
    return;
  }
  SeparatorResult r = separate(m);
  out.insert(out.end(), r.s.begin(), r.s.end());
  for (const std::vector<int>* part : {&r.part1, &r.part2}) {
    if (part->empty()) continue;
    std::vector<int> orig;
    CombinatorialMap sub = restrict_map(m, *part, &orig);
    std::size_t at = out.size();
    order_rec(sub, out);
    for (std::size_t i = at; i < out.size(); i++) out[i] = orig[out[i]];
  }
}

}  // namespace

VertexOrdering separator_ordering(const CombinatorialMap& m) {
  VertexOrdering out;
  out.reserve(m.vertex_count);
  order_rec(m, out);
  return out;
}

VertexOrdering lift_ordering(const VertexOrdering& phiT, const TwistDecomposition& td) {
  int k = static_cast<int>(td.blocks.size());
  if (static_cast<int>(phiT.size()) != k)
    throw Error(Errc::InconsistentInputs, "block ordering has wrong length");
  std::vector<int> posB(k, -1);
  for (int i = 0; i < k; i++) {
    int b = phiT[i];
    if (b < 0 || b >= k || posB[b] != -1)
      throw Error(Errc::InconsistentInputs, "block ordering is not a bijection");
    posB[b] = i;
  }

  // External-edge counts per crossing, split by whether the far block
  // comes earlier or later in phiT.
  int c = td.crossing_count();
  std::vector<int> earlier(c, 0), later(c, 0);
  for (auto [a, b] : td.diagram_edges) {
    int ba = td.block_of[a], bb = td.block_of[b];
    if (ba == bb) continue;
    (posB[bb] < posB[ba] ? earlier[a] : later[a])++;
    (posB[ba] < posB[bb] ? earlier[b] : later[b])++;
  }

  VertexOrdering out;
  out.reserve(c);
  for (int b : phiT) {
    std::vector<int> chain = td.blocks[b].crossings;
    if (chain.size() >= 2) {
      // Only the chain ends carry external edges; pick the direction whose
      // mid-chain cut (later edges behind us + earlier edges ahead) is lower.
      int fwd = later[chain.front()] + earlier[chain.back()];
      int rev = later[chain.back()] + earlier[chain.front()];
      if (fwd > rev) std::reverse(chain.begin(), chain.end());
    }
    out.insert(out.end(), chain.begin(), chain.end());
  }
  return out;
}

SweepProfile sweep_profile(const CombinatorialMap& m, const VertexOrdering& phi) {
  auto adj = adjacency(m.to_graph());
  SweepProfile out;
  out.vertices = phi;
  std::vector<char> placed(m.vertex_count, 0);
  int cur = 0;
  for (std::size_t i = 0; i < phi.size(); i++) {
    int v = phi[i];
    if (v >= 0 && v < m.vertex_count && !placed[v]) {
      for (int w : adj[v]) cur += placed[w] ? -1 : 1;
      placed[v] = 1;
    }
    if (i + 1 < phi.size()) {
      out.arc_counts.push_back(cur);
      out.max_arcs = std::max(out.max_arcs, cur);
    }
  }
  return out;
}

int compare_lex(const WidthProfile& a, const WidthProfile& b) {
  std::size_t n = std::min(a.lexWidth.size(), b.lexWidth.size());
  for (std::size_t i = 0; i < n; i++) {
    if (a.lexWidth[i] != b.lexWidth[i]) return a.lexWidth[i] < b.lexWidth[i] ? -1 : 1;
  }
  if (a.lexWidth.size() != b.lexWidth.size())
    return a.lexWidth.size() < b.lexWidth.size() ? -1 : 1;
  return 0;
}

}  // namespace linkwidth
