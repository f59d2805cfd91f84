#include "doctest.h"

#include <cmath>
#include <vector>

#include "linkwidth/diagram_gen.hpp"
#include "linkwidth/errors.hpp"
#include "linkwidth/pd_code.hpp"
#include "linkwidth/selfcheck.hpp"
#include "linkwidth/separator.hpp"
#include "linkwidth/triangulate.hpp"
#include "linkwidth/twist.hpp"

using namespace linkwidth;

namespace {

CombinatorialMap path3() {
  CombinatorialMap m;
  m.vertex_count = 3;
  m.sigma = {0, 2, 1, 3};
  m.vertex_of = {0, 1, 1, 2};
  validate_map(m);
  return m;
}

}  // namespace

TEST_CASE("path separator is the middle vertex") {
  SeparatorResult r = separate(path3());
  CHECK(r.s == std::vector<int>{1});
  CHECK(r.part1 == std::vector<int>{0});
  CHECK(r.part2 == std::vector<int>{2});
}

TEST_CASE("tiny graphs use the whole vertex set") {
  CombinatorialMap one;
  one.vertex_count = 1;
  SeparatorResult r1 = separate(one);
  CHECK(r1.s == std::vector<int>{0});
  CHECK(r1.part1.empty());
  CHECK(r1.part2.empty());

  CombinatorialMap two;
  two.vertex_count = 2;
  two.sigma = {0, 1};
  two.vertex_of = {0, 1};
  SeparatorResult r2 = separate(two);
  CHECK(r2.s == std::vector<int>{0, 1});
  CHECK(r2.part1.empty());
  CHECK(r2.part2.empty());
}

TEST_CASE("disconnected graphs may separate for free") {
  CombinatorialMap m;
  m.vertex_count = 6;
  m.sigma = {5, 2, 1, 4, 3, 0, 11, 8, 7, 10, 9, 6};
  m.vertex_of = {0, 1, 1, 2, 2, 0, 3, 4, 4, 5, 5, 3};
  validate_map(m);
  SeparatorResult r = separate(m);
  CHECK(r.s.empty());
  CHECK(r.part1 == std::vector<int>{0, 1, 2});
  CHECK(r.part2 == std::vector<int>{3, 4, 5});
  CHECK(separator_invariants_ok(m, r));
}

TEST_CASE("non-spherical maps are rejected") {
  CombinatorialMap m;
  m.vertex_count = 1;
  m.sigma = {2, 3, 1, 0};
  m.vertex_of = {0, 0, 0, 0};
  validate_map(m);
  try {
    separate(m);
    FAIL("expected NonSpherical");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonSpherical);
  }
}

TEST_CASE("separator invariants hold on seeded triangulations") {
  for (int n : {3, 4, 9, 25, 80, 333}) {
    for (uint64_t seed : {1u, 2u}) {
      CombinatorialMap m = random_triangulation(n, seed);
      SeparatorResult r = separate(m);
      CHECK(separator_invariants_ok(m, r));
    }
  }
}

TEST_CASE("large triangulation separator stays within the stated constants") {
  CombinatorialMap m = random_triangulation(1000, 42);
  SeparatorResult r = separate(m);
  CHECK(separator_invariants_ok(m, r));
  CHECK(static_cast<double>(r.s.size()) <= std::sqrt(8000.0));
  CHECK(3 * r.part1.size() <= 2000);
  CHECK(3 * r.part2.size() <= 2000);
}

TEST_CASE("separator invariants hold on twist graphs") {
  for (int n : {6, 18, 40}) {
    PDCode pd = random_diagram(n, 77 + n);
    CombinatorialMap m = build_map(pd);
    FaceSet fs = faces(m);
    TwistDecomposition td = twist_decomposition(m, fs);
    TwistGraph tg = twist_graph(td, m);
    SeparatorResult r = separate(tg.map);
    CHECK(separator_invariants_ok(tg.map, r));
  }
}

TEST_CASE("separate is deterministic") {
  CombinatorialMap m = random_triangulation(120, 5);
  SeparatorResult a = separate(m);
  SeparatorResult b = separate(m);
  CHECK(a.s == b.s);
  CHECK(a.part1 == b.part1);
  CHECK(a.part2 == b.part2);
}

TEST_CASE("restrict_map keeps rotations and reports old ids") {
  CombinatorialMap m = path3();
  std::vector<int> back;
  CombinatorialMap left = restrict_map(m, {0, 1}, &back);
  CHECK(left.vertex_count == 2);
  CHECK(left.edge_count() == 1);
  CHECK(back == std::vector<int>{0, 1});

  CombinatorialMap ends = restrict_map(m, {0, 2}, &back);
  CHECK(ends.vertex_count == 2);
  CHECK(ends.edge_count() == 0);
  CHECK(back == std::vector<int>{0, 2});
}
