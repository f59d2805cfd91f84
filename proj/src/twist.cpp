#include "linkwidth/twist.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "linkwidth/errors.hpp"
#include "linkwidth/map_editor.hpp"

namespace linkwidth {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) {
    for (int i = 0; i < n; i++) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::vector<char> bigon_edge_flags(const CombinatorialMap& m, const FaceSet& fs) {
  std::vector<char> on_bigon(m.edge_count(), 0);
  for (const auto& f : fs.faces)
    if (f.size() == 2)
      for (int d : f) on_bigon[d / 2] = 1;
  return on_bigon;
}

}  // namespace

TwistDecomposition twist_decomposition(const CombinatorialMap& m, const FaceSet& fs) {
  int n = m.vertex_count;
  Dsu dsu(n);
  std::vector<char> touches_bigon(n, 0);
  std::map<std::pair<int, int>, int> bigon_pairs;
  for (const auto& f : fs.faces) {
    if (f.size() != 2) continue;
    int u = m.vertex_of[f[0]], v = m.vertex_of[f[1]];
    touches_bigon[u] = touches_bigon[v] = 1;
    if (u != v) {
      dsu.unite(u, v);
      bigon_pairs[{std::min(u, v), std::max(u, v)}]++;
    }
  }

  std::vector<std::vector<int>> members(n);
  for (int v = 0; v < n; v++) members[dsu.find(v)].push_back(v);

  std::vector<std::set<int>> adj(n);
  for (const auto& [pr, cnt] : bigon_pairs) {
    adj[pr.first].insert(pr.second);
    adj[pr.second].insert(pr.first);
  }

  TwistDecomposition td;
  td.block_of.assign(n, -1);
  for (int root = 0; root < n; root++) {
    if (members[root].empty()) continue;
    const auto& mem = members[root];
    TwistBlock blk;
    int k = static_cast<int>(mem.size());
    for (int v : mem) blk.has_bigon |= touches_bigon[v] != 0;

    int bigon_count = 0;
    for (int v : mem)
      for (int w : adj[v])
        if (v < w) bigon_count += bigon_pairs.at({v, w});
    blk.cyclic = blk.has_bigon && bigon_count >= k;

    if (k == 1) {
      blk.crossings = {mem[0]};
    } else {
      // The simple bigon adjacency has max degree 2, so each block is a
      // path or a cycle; walk it from a pinned start for determinism.
      int start = -1;
      for (int v : mem)
        if (adj[v].size() <= 1) {
          start = v;
          break;
        }
      if (start == -1) start = mem[0];
      std::vector<char> used(n, 0);
      int cur = start;
      while (cur != -1) {
        used[cur] = 1;
        blk.crossings.push_back(cur);
        int nxt = -1;
        for (int w : adj[cur])
          if (!used[w]) {
            nxt = w;
            break;
          }
        cur = nxt;
      }
    }

    int id = td.t();
    for (int v : mem) td.block_of[v] = id;
    td.blocks.push_back(std::move(blk));
  }

  auto on_bigon = bigon_edge_flags(m, fs);
  for (int e = 0; e < m.edge_count(); e++) {
    auto [u, v] = m.edge_ends(e);
    td.diagram_edges.emplace_back(u, v);
    if (u != v && td.block_of[u] == td.block_of[v] && !on_bigon[e])
      td.blocks[td.block_of[u]].extra_internal = true;
  }
  return td;
}

TwistGraph twist_graph(const TwistDecomposition& td, const CombinatorialMap& m) {
  auto on_bigon = bigon_edge_flags(m, faces(m));
  MapEditor ed(m);
  for (int e = 0; e < m.edge_count(); e++) {
    if (!on_bigon[e]) continue;
    if (ed.is_loop(e))
      ed.delete_edge(e);
    else
      ed.contract_edge(e);
  }

  TwistGraph tg;
  std::vector<int> new_to_old_vertex;
  tg.map = ed.freeze(nullptr, &new_to_old_vertex, &tg.edge_origin);
  if (tg.map.vertex_count != td.t())
    throw Error(Errc::InconsistentInputs, "decomposition does not match the map");
  for (int i = 0; i < tg.map.vertex_count; i++)
    if (td.block_of[new_to_old_vertex[i]] != i)
      throw Error(Errc::InconsistentInputs, "block numbering mismatch");
  return tg;
}

}  // namespace linkwidth
