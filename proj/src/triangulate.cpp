#include "linkwidth/triangulate.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "linkwidth/errors.hpp"
#include "linkwidth/map_editor.hpp"
#include "linkwidth/rng.hpp"

namespace linkwidth {

CombinatorialMap simplify_map(const CombinatorialMap& m, std::vector<int>* new_to_old_edge) {
  MapEditor ed(m);
  std::set<std::pair<int, int>> seen;
  for (int e = 0; e < m.edge_count(); e++) {
    auto [u, v] = m.edge_ends(e);
    if (u == v) {
      ed.delete_edge(e);
      continue;
    }
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second) ed.delete_edge(e);
  }
  return ed.freeze(nullptr, nullptr, new_to_old_edge);
}

namespace {

// Splits the face walk with a diagonal between corners p and q; returns the
// two sub-walks. Corner p is the tail vertex of walk[p].
std::pair<std::vector<int>, std::vector<int>> split_face(MapEditor& ed,
                                                         const std::vector<int>& walk, int p,
                                                         int q) {
  int k = static_cast<int>(walk.size());
  int u = ed.vertex_of(walk[p]);
  int w = ed.vertex_of(walk[q]);
  int anchor_u = walk[(p + k - 1) % k] ^ 1;
  int anchor_w = walk[(q + k - 1) % k] ^ 1;
  int e = ed.add_edge(u, anchor_u, w, anchor_w);
  int gu = 2 * e, gw = 2 * e + 1;
  std::vector<int> w1, w2;
  for (int i = p; i != q; i = (i + 1) % k) w1.push_back(walk[i]);
  w1.push_back(gw);
  for (int i = q; i != p; i = (i + 1) % k) w2.push_back(walk[i]);
  w2.push_back(gu);
  return {std::move(w1), std::move(w2)};
}

}  // namespace

TriangulationResult triangulate(const CombinatorialMap& m) {
  int n = m.vertex_count;
  if (n < 3) throw Error(Errc::TooSmall, "triangulation needs at least 3 vertices");
  if (!m.connected()) throw Error(Errc::Disconnected, "triangulation needs a connected map");
  if (!components_spherical(m)) throw Error(Errc::NonSpherical, "map is not spherical");

  std::set<std::pair<int, int>> adj;
  for (int e = 0; e < m.edge_count(); e++) {
    auto [u, v] = m.edge_ends(e);
    if (u == v || !adj.insert(std::minmax(u, v)).second)
      throw Error(Errc::DomainError, "triangulation needs a simple map");
  }

  MapEditor ed(m);
  TriangulationResult out;
  std::vector<std::vector<int>> pending = ed.face_walks();
  while (!pending.empty()) {
    std::vector<int> walk = std::move(pending.back());
    pending.pop_back();
    int k = static_cast<int>(walk.size());
    if (k <= 3) continue;

    auto corner = [&](int i) { return ed.vertex_of(walk[i]); };
    auto usable = [&](int p, int q) {
      int d = q - p;
      if (d < 2 || k - d < 2) return false;
      int u = corner(p), w = corner(q);
      return u != w && !adj.count(std::minmax(u, w));
    };
    int bp = -1, bq = -1;
    for (int p = 0; p < k && bp == -1; p++) {
      for (int off : {2, k - 2}) {
        int q = p + off;
        if (q < k && usable(p, q)) {
          bp = p;
          bq = q;
          break;
        }
      }
    }
    for (int p = 0; p < k && bp == -1; p++)
      for (int q = p + 2; q < k && bp == -1; q++)
        if (usable(p, q)) {
          bp = p;
          bq = q;
        }
    if (bp == -1) throw Error(Errc::DomainError, "face admits no diagonal");

    int u = corner(bp), w = corner(bq);
    adj.insert(std::minmax(u, w));
    out.added_edges.emplace_back(u, w);
    auto [w1, w2] = split_face(ed, walk, bp, bq);
    pending.push_back(std::move(w1));
    pending.push_back(std::move(w2));
  }
  out.map = ed.freeze();
  return out;
}

CombinatorialMap random_triangulation(int n, uint64_t seed) {
  if (n < 3) throw Error(Errc::TooSmall, "need at least 3 vertices");
  CombinatorialMap base;
  base.vertex_count = 3;
  base.sigma = {5, 2, 1, 4, 3, 0};
  base.vertex_of = {0, 1, 1, 2, 2, 0};

  MapEditor ed(base);
  Rng rng(seed);
  for (int v = 3; v < n; v++) {
    auto walks = ed.face_walks();
    const auto& f = walks[rng.next_index(walks.size())];
    int a = f[0], b = f[1], c = f[2];
    int va = ed.vertex_of(a), vb = ed.vertex_of(b), vc = ed.vertex_of(c);
    int x = ed.add_vertex();
    int sa = ed.add_edge(x, -1, va, c ^ 1);
    int sc = ed.add_edge(x, 2 * sa, vc, b ^ 1);
    ed.add_edge(x, 2 * sc, vb, a ^ 1);
  }
  return ed.freeze();
}

}  // namespace linkwidth
