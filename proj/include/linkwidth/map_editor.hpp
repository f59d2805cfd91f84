#pragma once

#include <vector>

#include "linkwidth/combinatorial_map.hpp"

namespace linkwidth {

// Mutable rotation system supporting the surgery every consumer needs:
// edge deletion, contraction of non-loop edges, vertex deletion, and edge
// insertion at a named corner. Rotations are circular doubly linked lists
// over dart ids; dart ids are stable, dead darts are never reused.
//
// Deletion merges the two faces of the edge; contraction splices the two
// rotations. Both preserve the genus of each component, so spherical maps
// stay spherical under any sequence of these operations.
class MapEditor {
 public:
  MapEditor() = default;
  explicit MapEditor(const CombinatorialMap& m);

  int add_vertex();

  // New edge between u and v. Each end is inserted immediately after the
  // given anchor dart in that vertex's rotation; anchor -1 requires the
  // vertex to be currently dartless. Returns the edge id.
  int add_edge(int u, int anchor_u, int v, int anchor_v);

  void delete_edge(int e);
  void contract_edge(int e);  // e must not be a loop; keeps the endpoint with
                              // the smaller vertex id
  void delete_vertex(int v);

  bool vertex_alive(int v) const { return vertex_alive_[v]; }
  bool edge_alive(int e) const { return dart_alive_[2 * e]; }
  bool dart_alive(int d) const { return dart_alive_[d]; }
  int vertex_of(int d) const { return vert_[d]; }
  int next(int d) const { return nxt_[d]; }
  int prev(int d) const { return prv_[d]; }
  int face_next(int d) const { return nxt_[d ^ 1]; }
  int vertex_limit() const { return static_cast<int>(vertex_alive_.size()); }
  int dart_limit() const { return static_cast<int>(dart_alive_.size()); }
  int rep_dart(int v) const { return rep_[v]; }  // -1 when dartless
  int degree(int v) const;
  bool is_loop(int e) const { return vert_[2 * e] == vert_[2 * e + 1]; }

  // Remaining faces as dart cycles, ordered by smallest dart id.
  std::vector<std::vector<int>> face_walks() const;

  // Compact to a CombinatorialMap. old_to_new_vertex gets vertex_limit()
  // entries (-1 for dead vertices); new_to_old_vertex lists surviving old
  // ids in new order. Either pointer may be null. Edges are renumbered in
  // increasing old-edge order.
  CombinatorialMap freeze(std::vector<int>* old_to_new_vertex = nullptr,
                          std::vector<int>* new_to_old_vertex = nullptr,
                          std::vector<int>* new_to_old_edge = nullptr) const;

 private:
  void unlink_dart(int d);
  void insert_after(int anchor, int d, int v);

  std::vector<int> nxt_, prv_, vert_;
  std::vector<int> rep_;
  std::vector<char> dart_alive_;
  std::vector<char> vertex_alive_;
};

}  // namespace linkwidth
