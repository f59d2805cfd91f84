#include "linkwidth/diagram_gen.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "linkwidth/errors.hpp"
#include "linkwidth/map_editor.hpp"
#include "linkwidth/rng.hpp"

namespace linkwidth {

namespace {

// One crossing whose strand curls once: rotation (0 2 3 1), both edges loops,
// faces of degree 1, 1, 2.
CombinatorialMap base_curl() {
  CombinatorialMap m;
  m.vertex_count = 1;
  m.sigma = {2, 0, 3, 1};
  m.vertex_of = {0, 0, 0, 0};
  return m;
}

// Rotation of u captured as a dart list, for slot lookups after deletions.
std::vector<int> ring_of(const MapEditor& ed, int u) {
  std::vector<int> ring;
  int d0 = ed.rep_dart(u);
  if (d0 < 0) return ring;
  int d = d0;
  do {
    ring.push_back(d);
    d = ed.next(d);
  } while (d != d0);
  return ring;
}

// Anchor for reinserting a dart into the angular slot d occupied in ring
// (the rotation snapshot taken before any deletion). Walks backwards from d
// until it hits a live dart or a dead dart whose slot has already been
// refilled (repl maps dead darts to their replacements). Returns -1 when the
// whole rotation is gone. Stale editor pointers are useless here: two darts
// deleted together can end up pointing at each other.
int slot_pred(const MapEditor& ed, const std::vector<int>& ring,
              const std::map<int, int>& repl, int d) {
  int n = static_cast<int>(ring.size());
  int idx = static_cast<int>(std::find(ring.begin(), ring.end(), d) - ring.begin());
  for (int k = 1; k < n; k++) {
    int c = ring[(idx - k + n) % n];
    auto it = repl.find(c);
    if (it != repl.end()) return it->second;
    if (ed.dart_alive(c)) return c;
  }
  return -1;
}

// Replace edge d/2 by a curled strand u -- w -- w -- v through a new
// crossing w whose rotation is (arc to u, loop, loop, arc to v).
void curl_move(MapEditor& ed, int d) {
  int dop = d ^ 1;
  int u = ed.vertex_of(d);
  int v = ed.vertex_of(dop);
  std::vector<int> ring_u = ring_of(ed, u);
  std::vector<int> ring_v = (u == v) ? ring_u : ring_of(ed, v);
  ed.delete_edge(d / 2);
  std::map<int, int> repl;

  int w = ed.add_vertex();
  int ea = ed.add_edge(u, slot_pred(ed, ring_u, repl, d), w, -1);
  repl[d] = 2 * ea;
  int first_loop_dart = ed.dart_limit();
  int el = ed.add_edge(w, 2 * ea + 1, w, first_loop_dart);
  int eg = ed.add_edge(w, 2 * el + 1, v, slot_pred(ed, ring_v, repl, dop));
  repl[dop] = 2 * eg + 1;
}

int alive_vertex_count(const MapEditor& ed) {
  int c = 0;
  for (int v = 0; v < ed.vertex_limit(); v++)
    if (ed.vertex_alive(v)) c++;
  return c;
}

int alive_edge_count(const MapEditor& ed) {
  int c = 0;
  for (int e = 0; e < ed.dart_limit() / 2; e++)
    if (ed.edge_alive(e)) c++;
  return c;
}

bool euler_ok(const MapEditor& ed) {
  long long v = alive_vertex_count(ed);
  long long e = alive_edge_count(ed);
  long long f = static_cast<long long>(ed.face_walks().size());
  return v - e + f == 2;
}

// Push the strand of d1's edge across d2's edge through their common face,
// creating crossings c1 and c2. The first strand becomes u - c1 - c2 - v and
// the second is rewired through both crossings; swap exchanges which of its
// ends meets c1, flip mirrors both new rotations. Exactly one of the four
// (swap, flip) variants keeps the map spherical, so the caller tries them on
// scratch copies.
void poke_move(MapEditor& ed, int d1, int d2, bool swap, bool flip) {
  int d1o = d1 ^ 1;
  int d2o = d2 ^ 1;
  int u = ed.vertex_of(d1);
  int v = ed.vertex_of(d1o);
  int far_c1 = swap ? d2 : d2o;  // host dart whose slot wires to c1
  int far_c2 = swap ? d2o : d2;
  int wu = ed.vertex_of(far_c2);
  int wv = ed.vertex_of(far_c1);

  std::map<int, std::vector<int>> rings;
  for (int x : {u, v, wu, wv})
    if (!rings.count(x)) rings[x] = ring_of(ed, x);

  ed.delete_edge(d1 / 2);
  ed.delete_edge(d2 / 2);
  std::map<int, int> repl;

  int c1 = ed.add_vertex();
  int c2 = ed.add_vertex();

  int ea = ed.add_edge(u, slot_pred(ed, rings[u], repl, d1), c1, -1);
  repl[d1] = 2 * ea;
  int em = ed.add_edge(c1, 2 * ea + 1, c2, -1);

  if (!flip) {
    // c1: (A M B Q), c2: (B M G C)
    int eb = ed.add_edge(c1, 2 * em, c2, 2 * em + 1);
    int eq = ed.add_edge(c1, 2 * eb, wv, slot_pred(ed, rings[wv], repl, far_c1));
    repl[far_c1] = 2 * eq + 1;
    int eg = ed.add_edge(c2, 2 * em + 1, v, slot_pred(ed, rings[v], repl, d1o));
    repl[d1o] = 2 * eg + 1;
    int ec = ed.add_edge(c2, 2 * eg, wu, slot_pred(ed, rings[wu], repl, far_c2));
    repl[far_c2] = 2 * ec + 1;
  } else {
    // c1: (A Q B M), c2: (B C G M)
    int eq = ed.add_edge(c1, 2 * ea + 1, wv, slot_pred(ed, rings[wv], repl, far_c1));
    repl[far_c1] = 2 * eq + 1;
    int eb = ed.add_edge(c1, 2 * eq, c2, 2 * em + 1);
    int ec = ed.add_edge(c2, 2 * eb + 1, wu, slot_pred(ed, rings[wu], repl, far_c2));
    repl[far_c2] = 2 * ec + 1;
    int eg = ed.add_edge(c2, 2 * ec, v, slot_pred(ed, rings[v], repl, d1o));
    repl[d1o] = 2 * eg + 1;
  }
}

std::vector<int> alive_darts(const MapEditor& ed) {
  std::vector<int> out;
  for (int d = 0; d < ed.dart_limit(); d++)
    if (ed.dart_alive(d)) out.push_back(d);
  return out;
}

PDCode emit_pd(const CombinatorialMap& m) {
  std::vector<int> min_dart(m.vertex_count, -1);
  for (int d = 0; d < static_cast<int>(m.sigma.size()); d++)
    if (min_dart[m.vertex_of[d]] < 0) min_dart[m.vertex_of[d]] = d;

  std::vector<std::array<int, 4>> tuples;
  for (int c = 0; c < m.vertex_count; c++) {
    std::array<int, 4> row{};
    int d = min_dart[c];
    for (int p = 0; p < 4; p++) {
      row[p] = d / 2 + 1;
      d = m.sigma[d];
    }
    tuples.push_back(row);
  }
  return pd_from_tuples(tuples);
}

}  // namespace

PDCode random_diagram(int n, std::uint64_t seed) {
  if (n < 1) throw Error(Errc::DomainError, "crossing count must be at least 1");

  Rng rng(seed);
  MapEditor ed(base_curl());
  int crossings = 1;

  while (crossings < n) {
    bool do_curl = crossings + 1 == n || rng.next_bool_percent(40);
    if (do_curl) {
      auto darts = alive_darts(ed);
      curl_move(ed, darts[rng.next_index(darts.size())]);
      crossings += 1;
    } else {
      auto walks = ed.face_walks();
      std::vector<std::size_t> eligible;
      for (std::size_t i = 0; i < walks.size(); i++)
        if (walks[i].size() >= 2) eligible.push_back(i);
      const auto& walk = walks[eligible[rng.next_index(eligible.size())]];
      int d1 = walk[rng.next_index(walk.size())];
      int d2 = d1;
      while (d2 / 2 == d1 / 2) d2 = walk[rng.next_index(walk.size())];

      bool done = false;
      for (int variant = 0; variant < 4 && !done; variant++) {
        MapEditor trial = ed;
        poke_move(trial, d1, d2, variant & 2, variant & 1);
        if (euler_ok(trial)) {
          ed = std::move(trial);
          done = true;
        }
      }
      if (!done) throw std::logic_error("poke: no spherical variant");
      crossings += 2;
    }
  }

  return emit_pd(ed.freeze());
}

}  // namespace linkwidth
