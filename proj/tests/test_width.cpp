#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "linkwidth/bounds.hpp"
#include "linkwidth/diagram_gen.hpp"
#include "linkwidth/errors.hpp"
#include "linkwidth/pd_code.hpp"
#include "linkwidth/rng.hpp"
#include "linkwidth/triangulate.hpp"
#include "linkwidth/twist.hpp"
#include "linkwidth/width.hpp"

using namespace linkwidth;

namespace {

Graph path(int n) {
  Graph g;
  g.n = n;
  for (int i = 0; i + 1 < n; i++) g.edges.push_back({i, i + 1});
  return g;
}

Graph cycle(int n) {
  Graph g = path(n);
  g.edges.push_back({n - 1, 0});
  return g;
}

Graph complete(int n) {
  Graph g;
  g.n = n;
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++) g.edges.push_back({i, j});
  return g;
}

int brute_width(const Graph& g) {
  VertexOrdering phi(g.n);
  std::iota(phi.begin(), phi.end(), 0);
  int best = -1;
  do {
    int w = ordering_width(g, phi).width;
    if (best < 0 || w < best) best = w;
  } while (std::next_permutation(phi.begin(), phi.end()));
  return best;
}

Graph seeded_graph(int n, uint64_t seed, int extra) {
  // Random connected graph: a spanning path plus `extra` chords.
  Rng rng(seed);
  Graph g = path(n);
  for (int i = 0; i < extra; i++) {
    int a = rng.next_int(n), b = rng.next_int(n);
    if (a != b) g.edges.push_back({a, b});
  }
  return g;
}

}  // namespace

TEST_CASE("ordering width profiles") {
  WidthProfile p = ordering_width(path(3), {0, 1, 2});
  CHECK(p.profile == std::vector<int>{1, 1, 0});
  CHECK(p.width == 1);
  CHECK(p.sumWidth == 2);
  CHECK(p.lexWidth == std::vector<int>{1, 1, 0});

  WidthProfile k = ordering_width(complete(4), {2, 0, 3, 1});
  CHECK(k.profile == std::vector<int>{3, 4, 3, 0});
  CHECK(k.width == 4);

  Graph one;
  one.n = 1;
  WidthProfile s = ordering_width(one, {0});
  CHECK(s.profile == std::vector<int>{0});
  CHECK(s.width == 0);
}

TEST_CASE("ordering width validates the ordering") {
  for (auto phi : {VertexOrdering{0, 0, 1}, VertexOrdering{0, 1}, VertexOrdering{0, 1, 3}}) {
    try {
      ordering_width(path(3), phi);
      FAIL("expected NotABijection");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotABijection);
    }
  }
}

TEST_CASE("loops never cross a cut, parallel edges count twice") {
  Graph g;
  g.n = 2;
  g.edges = {{0, 0}, {0, 1}};
  CHECK(ordering_width(g, {0, 1}).width == 1);

  g.edges = {{0, 1}, {0, 1}};
  WidthProfile p = ordering_width(g, {0, 1});
  CHECK(p.profile == std::vector<int>{2, 0});
  CHECK(p.width == 2);
}

TEST_CASE("exact width on known graphs") {
  CHECK(exact_width(path(5)).width == 1);
  CHECK(exact_width(cycle(4)).width == 2);
  CHECK(exact_width(complete(4)).width == 4);

  Graph empty;
  CHECK(exact_width(empty).width == 0);
}

TEST_CASE("exact width ordering achieves the reported width") {
  for (uint64_t seed : {3u, 14u, 15u}) {
    Graph g = seeded_graph(9, seed, 6);
    ExactWidth ew = exact_width(g);
    CHECK(ordering_width(g, ew.ordering).width == ew.width);
  }
}

TEST_CASE("exact width agrees with permutation brute force") {
  for (uint64_t seed : {1u, 2u, 3u, 4u}) {
    Graph g = seeded_graph(7, seed, 5);
    CHECK(exact_width(g).width == brute_width(g));
  }
}

TEST_CASE("exact width size limit") {
  try {
    exact_width(path(21));
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooLarge);
  }
}

TEST_CASE("cheeger constants of known graphs") {
  CheegerResult c4 = graph_cheeger(cycle(4));
  CHECK(c4.h == Rational::make(1, 1));
  CHECK(c4.witness == std::vector<int>{0, 1});

  CheegerResult k4 = graph_cheeger(complete(4));
  CHECK(k4.h == Rational::make(2, 1));

  CheegerResult k2 = graph_cheeger(complete(2));
  CHECK(k2.h == Rational::make(1, 1));
  CHECK(k2.witness == std::vector<int>{0});

  CheegerResult p4 = graph_cheeger(path(4));
  CHECK(p4.h == Rational::make(1, 2));
  CHECK(p4.witness == std::vector<int>{0, 1});
}

TEST_CASE("cheeger size limits") {
  try {
    graph_cheeger(path(1));
    FAIL("expected DomainError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DomainError);
  }
  try {
    graph_cheeger(path(25));
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooLarge);
  }
}

TEST_CASE("cheeger is at most width over half the vertices") {
  for (uint64_t seed : {5u, 6u, 7u, 8u}) {
    Graph g = seeded_graph(10, seed, 4);
    Rational h = graph_cheeger(g).h;
    Rational bound = Rational::make(exact_width(g).width, 5);
    CHECK(h <= bound);
  }
}

TEST_CASE("separator orderings meet the degree width bound") {
  double k612 = BoundConstants::standard().k612;
  for (int n : {3, 10, 60, 200}) {
    CombinatorialMap m = random_triangulation(n, 21);
    VertexOrdering phi = separator_ordering(m);
    Graph g = m.to_graph();
    WidthProfile p = ordering_width(g, phi);
    CHECK(p.width <= k612 * g.max_degree() * std::sqrt(n) + 1e-9);
  }
}

TEST_CASE("lifting a twist ordering") {
  auto lifted = [](const char* pd_text) {
    CombinatorialMap m = build_map(parse_pd(pd_text));
    FaceSet fs = faces(m);
    TwistDecomposition td = twist_decomposition(m, fs);
    TwistGraph tg = twist_graph(td, m);
    VertexOrdering phiT = separator_ordering(tg.map);
    int widthT = ordering_width(tg.map.to_graph(), phiT).width;
    VertexOrdering phiG = lift_ordering(phiT, td);
    int widthG = ordering_width(m.to_graph(), phiG).width;
    int slack = td.any_degenerate() ? 4 : 2;
    CHECK(widthG <= widthT + slack);
    return std::pair{widthT, widthG};
  };

  CHECK(lifted("[[1,2,2,3],[3,4,4,1]]") == std::pair{0, 2});
  CHECK(lifted("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]") == std::pair{0, 4});
  CHECK(lifted("[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]") == std::pair{4, 4});
  lifted("[[13,14,2,1],[1,2,4,3],[3,4,6,5],[5,6,8,7],[7,8,10,9],[9,10,12,11],[11,12,14,13]]");
}

TEST_CASE("lift rejects inconsistent inputs") {
  CombinatorialMap m = build_map(parse_pd("[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]"));
  TwistDecomposition td = twist_decomposition(m, faces(m));
  for (auto phi : {VertexOrdering{0}, VertexOrdering{0, 0}, VertexOrdering{0, 2}}) {
    try {
      lift_ordering(phi, td);
      FAIL("expected InconsistentInputs");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::InconsistentInputs);
    }
  }
}

TEST_CASE("sweep profile equals the ordering width") {
  CombinatorialMap m;
  m.vertex_count = 3;
  m.sigma = {0, 2, 1, 3};
  m.vertex_of = {0, 1, 1, 2};
  SweepProfile sp = sweep_profile(m, {0, 1, 2});
  CHECK(sp.vertices == std::vector<int>{0, 1, 2});
  CHECK(sp.arc_counts == std::vector<int>{1, 1});
  CHECK(sp.max_arcs == 1);

  // the tetrahedron map: any order sweeps (3, 4, 3)
  CombinatorialMap k4 = random_triangulation(4, 1);
  SweepProfile ks = sweep_profile(k4, {2, 0, 3, 1});
  CHECK(ks.arc_counts == std::vector<int>{3, 4, 3});
  CHECK(ks.max_arcs == 4);

  for (int n : {5, 20, 45}) {
    PDCode pd = random_diagram(n, 400 + n);
    CombinatorialMap dm = build_map(pd);
    FaceSet fs = faces(dm);
    TwistDecomposition td = twist_decomposition(dm, fs);
    TwistGraph tg = twist_graph(td, dm);
    VertexOrdering phi = lift_ordering(separator_ordering(tg.map), td);
    WidthProfile p = ordering_width(dm.to_graph(), phi);
    SweepProfile s = sweep_profile(dm, phi);
    CHECK(s.max_arcs == p.width);
    std::vector<int> between(p.profile.begin(), p.profile.end() - 1);
    CHECK(s.arc_counts == between);
  }
}

TEST_CASE("lexicographic profile comparison") {
  auto mk = [](std::vector<int> lex) {
    WidthProfile p;
    p.lexWidth = std::move(lex);
    return p;
  };
  CHECK(compare_lex(mk({4, 2, 2}), mk({4, 3})) < 0);
  CHECK(compare_lex(mk({5}), mk({4, 4, 4})) > 0);
  CHECK(compare_lex(mk({4, 2}), mk({4, 2})) == 0);
  CHECK(compare_lex(mk({4, 2}), mk({4, 2, 1})) < 0);
}
