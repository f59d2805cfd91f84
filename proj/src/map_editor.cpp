#include "linkwidth/map_editor.hpp"

#include <cassert>
#include <utility>

namespace linkwidth {

MapEditor::MapEditor(const CombinatorialMap& m) {
  int nd = m.dart_count();
  nxt_ = m.sigma;
  prv_.assign(nd, -1);
  for (int d = 0; d < nd; d++) prv_[m.sigma[d]] = d;
  vert_ = m.vertex_of;
  dart_alive_.assign(nd, 1);
  vertex_alive_.assign(m.vertex_count, 1);
  rep_.assign(m.vertex_count, -1);
  for (int d = nd - 1; d >= 0; d--) rep_[vert_[d]] = d;
}

int MapEditor::add_vertex() {
  rep_.push_back(-1);
  vertex_alive_.push_back(1);
  return static_cast<int>(rep_.size()) - 1;
}

int MapEditor::degree(int v) const {
  int h = rep_[v];
  if (h == -1) return 0;
  int d = h, cnt = 0;
  do {
    cnt++;
    d = nxt_[d];
  } while (d != h);
  return cnt;
}

void MapEditor::unlink_dart(int d) {
  assert(dart_alive_[d]);
  int v = vert_[d];
  if (nxt_[d] == d) {
    rep_[v] = -1;
  } else {
    nxt_[prv_[d]] = nxt_[d];
    prv_[nxt_[d]] = prv_[d];
    if (rep_[v] == d) rep_[v] = nxt_[d];
  }
  dart_alive_[d] = 0;
}

void MapEditor::insert_after(int anchor, int d, int v) {
  vert_[d] = v;
  dart_alive_[d] = 1;
  if (anchor == -1) {
    assert(rep_[v] == -1);
    nxt_[d] = prv_[d] = d;
    rep_[v] = d;
    return;
  }
  assert(dart_alive_[anchor] && vert_[anchor] == v);
  nxt_[d] = nxt_[anchor];
  prv_[d] = anchor;
  prv_[nxt_[anchor]] = d;
  nxt_[anchor] = d;
}

int MapEditor::add_edge(int u, int anchor_u, int v, int anchor_v) {
  int d0 = dart_limit();
  nxt_.resize(d0 + 2);
  prv_.resize(d0 + 2);
  vert_.resize(d0 + 2);
  dart_alive_.resize(d0 + 2, 0);
  insert_after(anchor_u, d0, u);
  insert_after(anchor_v, d0 + 1, v);
  return d0 / 2;
}

void MapEditor::delete_edge(int e) {
  unlink_dart(2 * e);
  unlink_dart(2 * e + 1);
}

void MapEditor::contract_edge(int e) {
  int x = 2 * e, y = 2 * e + 1;
  if (vert_[y] < vert_[x]) std::swap(x, y);
  int u = vert_[x], v = vert_[y];
  assert(u != v);
  bool u_single = nxt_[x] == x;
  bool v_single = nxt_[y] == y;
  if (v_single) {
    unlink_dart(y);
    unlink_dart(x);
  } else if (u_single) {
    unlink_dart(y);
    int h = rep_[v];
    int d = h;
    do {
      vert_[d] = u;
      d = nxt_[d];
    } while (d != h);
    dart_alive_[x] = 0;
    rep_[u] = h;
    rep_[v] = -1;
  } else {
    int ax = prv_[x], bx = nxt_[x];
    int ay = prv_[y], by = nxt_[y];
    nxt_[ax] = by;
    prv_[by] = ax;
    nxt_[ay] = bx;
    prv_[bx] = ay;
    for (int d = by;; d = nxt_[d]) {
      vert_[d] = u;
      if (d == ay) break;
    }
    if (rep_[u] == x) rep_[u] = bx;
    rep_[v] = -1;
    dart_alive_[x] = dart_alive_[y] = 0;
  }
  vertex_alive_[v] = 0;
}

void MapEditor::delete_vertex(int v) {
  while (rep_[v] != -1) delete_edge(rep_[v] / 2);
  vertex_alive_[v] = 0;
}

std::vector<std::vector<int>> MapEditor::face_walks() const {
  std::vector<char> seen(dart_limit(), 0);
  std::vector<std::vector<int>> walks;
  for (int d0 = 0; d0 < dart_limit(); d0++) {
    if (!dart_alive_[d0] || seen[d0]) continue;
    std::vector<int> w;
    int d = d0;
    do {
      seen[d] = 1;
      w.push_back(d);
      d = face_next(d);
    } while (d != d0);
    walks.push_back(std::move(w));
  }
  return walks;
}

CombinatorialMap MapEditor::freeze(std::vector<int>* old_to_new_vertex,
                                   std::vector<int>* new_to_old_vertex,
                                   std::vector<int>* new_to_old_edge) const {
  std::vector<int> vmap(vertex_limit(), -1);
  std::vector<int> vback;
  for (int v = 0; v < vertex_limit(); v++) {
    if (vertex_alive_[v]) {
      vmap[v] = static_cast<int>(vback.size());
      vback.push_back(v);
    }
  }
  std::vector<int> dmap(dart_limit(), -1);
  std::vector<int> eback;
  int ne = 0;
  for (int e = 0; e * 2 < dart_limit(); e++) {
    if (!dart_alive_[2 * e]) continue;
    dmap[2 * e] = 2 * ne;
    dmap[2 * e + 1] = 2 * ne + 1;
    eback.push_back(e);
    ne++;
  }
  CombinatorialMap m;
  m.vertex_count = static_cast<int>(vback.size());
  m.sigma.assign(2 * ne, -1);
  m.vertex_of.assign(2 * ne, -1);
  for (int d = 0; d < dart_limit(); d++) {
    if (dmap[d] == -1) continue;
    m.sigma[dmap[d]] = dmap[nxt_[d]];
    m.vertex_of[dmap[d]] = vmap[vert_[d]];
  }
  if (old_to_new_vertex) *old_to_new_vertex = std::move(vmap);
  if (new_to_old_vertex) *new_to_old_vertex = std::move(vback);
  if (new_to_old_edge) *new_to_old_edge = std::move(eback);
  return m;
}

}  // namespace linkwidth
