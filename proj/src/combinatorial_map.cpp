#include "linkwidth/combinatorial_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace linkwidth {

std::vector<int> CombinatorialMap::degrees() const {
  std::vector<int> deg(vertex_count, 0);
  for (int v : vertex_of) deg[v]++;
  return deg;
}

int CombinatorialMap::degree(int v) const {
  int d = 0;
  for (int w : vertex_of)
    if (w == v) d++;
  return d;
}

int CombinatorialMap::max_degree() const {
  int best = 0;
  for (int d : degrees())
    if (d > best) best = d;
  return best;
}

std::vector<int> CombinatorialMap::components() const {
  std::vector<int> comp(vertex_count, -1);
  std::vector<std::vector<int>> adj(vertex_count);
  for (int e = 0; e < edge_count(); e++) {
    auto [a, b] = edge_ends(e);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  int next_id = 0;
  std::vector<int> stack;
  for (int s = 0; s < vertex_count; s++) {
    if (comp[s] != -1) continue;
    comp[s] = next_id;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (comp[w] == -1) {
          comp[w] = next_id;
          stack.push_back(w);
        }
      }
    }
    next_id++;
  }
  return comp;
}

bool CombinatorialMap::connected() const {
  if (vertex_count == 0) return true;
  auto comp = components();
  return *std::max_element(comp.begin(), comp.end()) == 0;
}

Graph CombinatorialMap::to_graph() const {
  Graph g;
  g.n = vertex_count;
  g.edges.reserve(edge_count());
  for (int e = 0; e < edge_count(); e++) g.edges.push_back(edge_ends(e));
  return g;
}

FaceSet faces(const CombinatorialMap& m) {
  FaceSet fs;
  fs.face_of.assign(m.dart_count(), -1);
  for (int d0 = 0; d0 < m.dart_count(); d0++) {
    if (fs.face_of[d0] != -1) continue;
    std::vector<int> cycle;
    int d = d0;
    do {
      fs.face_of[d] = fs.count();
      cycle.push_back(d);
      d = m.face_next(d);
    } while (d != d0);
    fs.faces.push_back(std::move(cycle));
  }
  return fs;
}

bool components_spherical(const CombinatorialMap& m) {
  auto comp = m.components();
  int ncomp = m.vertex_count == 0
                  ? 0
                  : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<int> v_cnt(ncomp, 0), e_cnt(ncomp, 0), f_cnt(ncomp, 0);
  for (int v = 0; v < m.vertex_count; v++) v_cnt[comp[v]]++;
  for (int e = 0; e < m.edge_count(); e++) e_cnt[comp[m.vertex_of[2 * e]]]++;
  FaceSet fs = faces(m);
  for (const auto& f : fs.faces) f_cnt[comp[m.vertex_of[f[0]]]]++;
  for (int c = 0; c < ncomp; c++) {
    if (e_cnt[c] == 0) {
      if (v_cnt[c] != 1) return false;  // edgeless component is one vertex
      continue;
    }
    if (v_cnt[c] - e_cnt[c] + f_cnt[c] != 2) return false;
  }
  return true;
}

void validate_map(const CombinatorialMap& m) {
  int nd = m.dart_count();
  if (nd % 2 != 0 || static_cast<int>(m.vertex_of.size()) != nd)
    throw std::logic_error("map arrays inconsistent");
  std::vector<char> seen(nd, 0);
  for (int d = 0; d < nd; d++) {
    int s = m.sigma[d];
    if (s < 0 || s >= nd) throw std::logic_error("sigma out of range");
    if (m.vertex_of[s] != m.vertex_of[d])
      throw std::logic_error("sigma leaves vertex");
    if (seen[s]) throw std::logic_error("sigma not a permutation");
    seen[s] = 1;
  }
  for (int v : m.vertex_of)
    if (v < 0 || v >= m.vertex_count) throw std::logic_error("vertex_of out of range");
}

}  // namespace linkwidth
