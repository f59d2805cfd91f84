#include "linkwidth/separator.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "linkwidth/errors.hpp"
#include "linkwidth/map_editor.hpp"
#include "linkwidth/triangulate.hpp"

namespace linkwidth {

namespace {

using Incidence = std::vector<std::vector<std::pair<int, int>>>;  // (edge, other end)

Incidence incidence(const CombinatorialMap& m) {
  Incidence inc(m.vertex_count);
  for (int e = 0; e < m.edge_count(); e++) {
    auto [a, b] = m.edge_ends(e);
    inc[a].push_back({e, b});
    if (a != b) inc[b].push_back({e, a});
  }
  return inc;
}

// Components after dropping `removed` vertices, ordered by smallest member;
// each component is sorted ascending.
std::vector<std::vector<int>> components_without(const Incidence& inc,
                                                 const std::vector<char>& removed) {
  int n = static_cast<int>(inc.size());
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n; s++) {
    if (seen[s] || removed[s]) continue;
    std::vector<int> comp;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (const auto& ew : inc[v]) {
        int w = ew.second;
        if (!seen[w] && !removed[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

// Descending-size greedy into two bins; equal loads favor part1. Since no
// component exceeds 2n/3, neither does either bin.
void pack_parts(const std::vector<std::vector<int>>& comps, std::vector<int>& part1,
                std::vector<int>& part2) {
  std::vector<int> order(comps.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return comps[a].size() > comps[b].size(); });
  std::size_t s1 = 0, s2 = 0;
  for (int idx : order) {
    if (s1 <= s2) {
      s1 += comps[idx].size();
      part1.insert(part1.end(), comps[idx].begin(), comps[idx].end());
    } else {
      s2 += comps[idx].size();
      part2.insert(part2.end(), comps[idx].begin(), comps[idx].end());
    }
  }
  std::sort(part1.begin(), part1.end());
  std::sort(part2.begin(), part2.end());
}

bool all_parts_small(const std::vector<std::vector<int>>& comps, int n) {
  for (const auto& c : comps)
    if (3 * static_cast<int>(c.size()) > 2 * n) return false;
  return true;
}

// Exhaustive minimum separator for tiny graphs: fewest removed vertices,
// then most balanced split, then lexicographically least vertex set.
std::vector<int> brute_separator(const Incidence& inc, int n) {
  for (int size = 0; size <= n; size++) {
    bool found = false;
    std::vector<int> best;
    std::size_t best_worst = 0;
    for (int mask = 0; mask < (1 << n); mask++) {
      if (__builtin_popcount(static_cast<unsigned>(mask)) != size) continue;
      std::vector<char> removed(n, 0);
      std::vector<int> sset;
      for (int v = 0; v < n; v++)
        if (mask >> v & 1) {
          removed[v] = 1;
          sset.push_back(v);
        }
      auto comps = components_without(inc, removed);
      if (!all_parts_small(comps, n)) continue;
      std::vector<int> p1, p2;
      pack_parts(comps, p1, p2);
      std::size_t worst = std::max(p1.size(), p2.size());
      if (!found || worst < best_worst ||
          (worst == best_worst &&
           std::lexicographical_compare(sset.begin(), sset.end(), best.begin(), best.end()))) {
        found = true;
        best = std::move(sset);
        best_worst = worst;
      }
    }
    if (found) return best;
  }
  return {};
}

struct Levels {
  std::vector<int> level;
  std::vector<int> parent_edge;
  std::vector<long long> size;
  std::vector<long long> cum;
  int max_level = 0;
};

Levels bfs_levels(const Incidence& inc) {
  int n = static_cast<int>(inc.size());
  Levels lv;
  lv.level.assign(n, -1);
  lv.parent_edge.assign(n, -1);
  std::vector<int> queue;
  queue.reserve(n);
  queue.push_back(0);
  lv.level[0] = 0;
  for (std::size_t h = 0; h < queue.size(); h++) {
    int v = queue[h];
    for (const auto& ew : inc[v]) {
      int w = ew.second;
      if (lv.level[w] < 0) {
        lv.level[w] = lv.level[v] + 1;
        lv.parent_edge[w] = ew.first;
        queue.push_back(w);
      }
    }
  }
  for (int v = 0; v < n; v++) lv.max_level = std::max(lv.max_level, lv.level[v]);
  lv.size.assign(lv.max_level + 1, 0);
  for (int v = 0; v < n; v++) lv.size[lv.level[v]]++;
  lv.cum.assign(lv.max_level + 1, 0);
  long long acc = 0;
  for (int l = 0; l <= lv.max_level; l++) {
    acc += lv.size[l];
    lv.cum[l] = acc;
  }
  return lv;
}

// Separator of a connected spherical map with n >= 9 vertices. Two breadth
// levels l0 <= l1 < l2 are cut so that each removed level plus twice its
// distance from the median level stays within 2*sqrt(weight); if the middle
// band still holds a component above 2n/3, everything at or below l0 is
// contracted to a hub, the band is triangulated, and a fundamental cycle of
// a breadth tree from the hub splits it. Total size is at most sqrt(8 n).
std::vector<int> lipton_tarjan(const CombinatorialMap& m, const Incidence& inc) {
  int n = m.vertex_count;
  Levels lv = bfs_levels(inc);

  long long need = (n + 1) / 2;
  int l1 = 0;
  while (lv.cum[l1] < need) l1++;
  long long k = lv.cum[l1];

  int l0 = 0;
  while (true) {
    long long s = lv.size[l0] + 2LL * (l1 - l0);
    if (s * s <= 4 * k) break;
    l0++;
  }
  int l2 = l1 + 1;
  while (true) {
    long long sz = l2 <= lv.max_level ? lv.size[l2] : 0;
    long long s = sz + 2LL * (l2 - l1 - 1);
    if (s * s <= 4 * (n - k)) break;
    l2++;
  }

  std::vector<char> removed(n, 0);
  std::vector<int> s0;
  for (int v = 0; v < n; v++)
    if (lv.level[v] == l0 || lv.level[v] == l2) {
      removed[v] = 1;
      s0.push_back(v);
    }
  if (all_parts_small(components_without(inc, removed), n)) return s0;

  // Middle band plus a hub: contract levels <= l0 onto vertex 0, drop
  // levels >= l2, clean out loops and parallels, then fill every face in.
  MapEditor ed(m);
  for (int v = 0; v < n; v++)
    if (lv.level[v] >= l2) ed.delete_vertex(v);
  for (int v = 1; v < n; v++)
    if (lv.level[v] >= 1 && lv.level[v] <= l0) ed.contract_edge(lv.parent_edge[v]);
  std::vector<int> back;
  CombinatorialMap mid = ed.freeze(nullptr, &back);
  TriangulationResult tri = triangulate(simplify_map(mid));
  const CombinatorialMap& tm = tri.map;
  int w = tm.vertex_count;

  Incidence tinc = incidence(tm);
  std::vector<int> depth(w, -1), par(w, 0), par_edge(w, -1);
  std::vector<int> order;
  order.reserve(w);
  depth[0] = 0;
  order.push_back(0);
  for (std::size_t h = 0; h < order.size(); h++) {
    int v = order[h];
    for (const auto& ew : tinc[v]) {
      int u = ew.second;
      if (depth[u] < 0) {
        depth[u] = depth[v] + 1;
        par[u] = v;
        par_edge[u] = ew.first;
        order.push_back(u);
      }
    }
  }
  std::vector<char> tree_edge(tm.edge_count(), 0);
  for (int v = 1; v < w; v++) tree_edge[par_edge[v]] = 1;

  int log2w = 1;
  while ((1 << log2w) < w) log2w++;
  std::vector<std::vector<int>> up(log2w, std::vector<int>(w));
  up[0] = par;
  for (int j = 1; j < log2w; j++)
    for (int v = 0; v < w; v++) up[j][v] = up[j - 1][up[j - 1][v]];
  auto lca = [&](int a, int b) {
    if (depth[a] < depth[b]) std::swap(a, b);
    int diff = depth[a] - depth[b];
    for (int j = 0; (1 << j) <= diff; j++)
      if (diff >> j & 1) a = up[j][a];
    if (a == b) return a;
    for (int j = log2w - 1; j >= 0; j--)
      if (up[j][a] != up[j][b]) {
        a = up[j][a];
        b = up[j][b];
      }
    return up[0][a];
  };

  // Non-tree edges form a spanning tree of the dual; subtree face counts
  // give the number of faces enclosed by each fundamental cycle.
  FaceSet fs = faces(tm);
  int fcount = fs.count();
  std::vector<std::vector<std::pair<int, int>>> dadj(fcount);
  for (int e = 0; e < tm.edge_count(); e++) {
    if (tree_edge[e]) continue;
    int f1 = fs.face_of[2 * e], f2 = fs.face_of[2 * e + 1];
    dadj[f1].push_back({f2, e});
    dadj[f2].push_back({f1, e});
  }
  std::vector<int> dpar(fcount, -1), dorder;
  std::vector<char> dseen(fcount, 0);
  dorder.reserve(fcount);
  dseen[0] = 1;
  dorder.push_back(0);
  for (std::size_t h = 0; h < dorder.size(); h++) {
    int f = dorder[h];
    for (const auto& fe : dadj[f])
      if (!dseen[fe.first]) {
        dseen[fe.first] = 1;
        dpar[fe.first] = f;
        dorder.push_back(fe.first);
      }
  }
  std::vector<long long> fsub(fcount, 1);
  for (int i = fcount - 1; i >= 1; i--) fsub[dpar[dorder[i]]] += fsub[dorder[i]];

  int pick = -1, pu = -1, pv = -1, panc = -1;
  for (int e = 0; e < tm.edge_count() && pick < 0; e++) {
    if (tree_edge[e]) continue;
    auto [a, b] = tm.edge_ends(e);
    int anc = lca(a, b);
    long long len = depth[a] + depth[b] - 2LL * depth[anc] + 1;
    int f1 = fs.face_of[2 * e], f2 = fs.face_of[2 * e + 1];
    int inner = dpar[f1] == f2 ? f1 : f2;
    long long vin = 1 + (fsub[inner] - len) / 2;
    long long vout = w - vin - len;
    if (3 * vin <= 2LL * w && 3 * vout <= 2LL * w) {
      pick = e;
      pu = a;
      pv = b;
      panc = anc;
    }
  }
  if (pick < 0) throw std::logic_error("separator: no admissible cycle");

  std::vector<int> out = s0;
  auto climb = [&](int v) {
    for (; v != panc; v = par[v])
      if (v != 0) out.push_back(back[v]);
  };
  climb(pu);
  climb(pv);
  if (panc != 0) out.push_back(back[panc]);
  return out;
}

}  // namespace

CombinatorialMap restrict_map(const CombinatorialMap& m, const std::vector<int>& keep,
                              std::vector<int>* new_to_old) {
  std::vector<char> in(m.vertex_count, 0);
  for (int v : keep) in[v] = 1;
  MapEditor ed(m);
  for (int v = 0; v < m.vertex_count; v++)
    if (!in[v]) ed.delete_vertex(v);
  return ed.freeze(nullptr, new_to_old);
}

SeparatorResult separate(const CombinatorialMap& m) {
  if (!components_spherical(m))
    throw Error(Errc::NonSpherical, "separator requires a spherical map");
  SeparatorResult r;
  int n = m.vertex_count;
  if (n == 0) return r;
  Incidence inc = incidence(m);

  std::vector<int> sep;
  if (n <= 2) {
    for (int v = 0; v < n; v++) sep.push_back(v);
  } else if (n <= 8) {
    sep = brute_separator(inc, n);
  } else {
    std::vector<char> none(n, 0);
    auto comps = components_without(inc, none);
    if (comps.size() > 1) {
      std::size_t big = 0;
      for (std::size_t i = 1; i < comps.size(); i++)
        if (comps[i].size() > comps[big].size()) big = i;
      if (3 * comps[big].size() > 2 * static_cast<std::size_t>(n)) {
        std::vector<int> orig;
        CombinatorialMap sub = restrict_map(m, comps[big], &orig);
        for (int v : separate(sub).s) sep.push_back(orig[v]);
      }
    } else {
      sep = lipton_tarjan(m, inc);
    }
  }

  std::vector<char> removed(n, 0);
  for (int v : sep) removed[v] = 1;
  pack_parts(components_without(inc, removed), r.part1, r.part2);
  std::sort(sep.begin(), sep.end());
  r.s = std::move(sep);
  return r;
}

}  // namespace linkwidth
