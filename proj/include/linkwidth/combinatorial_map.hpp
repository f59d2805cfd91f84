#pragma once

#include <vector>

#include "linkwidth/graph.hpp"

namespace linkwidth {

// Embedded graph on an oriented surface, stored as a rotation system.
// Darts come in pairs: darts 2e and 2e+1 are the two ends of edge e, so the
// edge involution is d ^ 1. sigma[d] is the next dart counterclockwise
// around the vertex of d. Vertices may carry no darts at all (isolated).
//
// Face orbits follow d -> sigma[d ^ 1]; a connected map is spherical exactly
// when V - E + F == 2, where a dartless connected map counts one face.
struct CombinatorialMap {
  int vertex_count = 0;
  std::vector<int> sigma;
  std::vector<int> vertex_of;

  int dart_count() const { return static_cast<int>(sigma.size()); }
  int edge_count() const { return dart_count() / 2; }

  static int opposite(int d) { return d ^ 1; }
  int face_next(int d) const { return sigma[d ^ 1]; }

  std::vector<int> degrees() const;
  int degree(int v) const;
  int max_degree() const;

  // endpoints of edge e as (vertex_of[2e], vertex_of[2e+1])
  std::pair<int, int> edge_ends(int e) const {
    return {vertex_of[2 * e], vertex_of[2 * e + 1]};
  }

  bool connected() const;
  // vertex -> component index, components numbered by smallest vertex
  std::vector<int> components() const;

  Graph to_graph() const;
};

struct FaceSet {
  std::vector<std::vector<int>> faces;  // each face as its dart cycle
  std::vector<int> face_of;             // dart -> face index

  int count() const { return static_cast<int>(faces.size()); }
  std::vector<int> degrees() const {
    std::vector<int> d;
    d.reserve(faces.size());
    for (const auto& f : faces) d.push_back(static_cast<int>(f.size()));
    return d;
  }
};

FaceSet faces(const CombinatorialMap& m);

// Euler check per connected component (every component embeds in its own
// sphere). A component with no edges contributes one face.
bool components_spherical(const CombinatorialMap& m);

// Structural sanity: sigma is a permutation whose cycles stay within one
// vertex, and vertex_of is consistent. Throws on violation; used by builders.
void validate_map(const CombinatorialMap& m);

}  // namespace linkwidth
