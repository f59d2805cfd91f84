#include "doctest.h"

#include <array>
#include <functional>
#include <vector>

#include "linkwidth/errors.hpp"
#include "linkwidth/pd_code.hpp"

using namespace linkwidth;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::MalformedInput;
}

}  // namespace

TEST_CASE("trefoil parses with labels kept and normalized") {
  PDCode pd = parse_pd("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]");
  CHECK(pd.crossing_count() == 3);
  CHECK(pd.edge_count() == 6);
  CHECK(pd.labels[0] == std::array<int, 4>{1, 4, 2, 5});
  CHECK(pd.labels[2] == std::array<int, 4>{5, 2, 6, 3});
  CHECK(pd.crossings[0] == std::array<int, 4>{0, 3, 1, 4});
  CHECK(pd.components.size() == 1);
  CHECK(pd.components[0].size() == 6);
  REQUIRE(pd.surgery.size() == 1);
  CHECK(!pd.surgery[0].has_value());
}

TEST_CASE("labels need not be consecutive") {
  PDCode a = parse_pd("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]");
  PDCode b = parse_pd("[[2,8,4,10],[6,12,8,2],[10,4,12,6]]");
  CHECK(a.crossings == b.crossings);
  CHECK(a.components == b.components);
}

TEST_CASE("empty diagram") {
  PDCode pd = parse_pd("[]");
  CHECK(pd.crossing_count() == 0);
  CHECK(pd.edge_count() == 0);
  CHECK(pd.components.empty());
  CHECK(pd.surgery.empty());
}

TEST_CASE("one-crossing curl is legal") {
  PDCode pd = parse_pd("[[1,2,2,1]]");
  CHECK(pd.crossing_count() == 1);
  CHECK(pd.components.size() == 1);
  CHECK(pd.components[0].size() == 2);
}

TEST_CASE("label multiplicity is checked") {
  CHECK(code_of([] { parse_pd("[[1,4,2,5],[3,6,4,2]]"); }) == Errc::BadIncidence);
  CHECK(code_of([] { parse_pd("[[1,1,1,1]]"); }) == Errc::BadIncidence);
}

TEST_CASE("malformed documents are rejected") {
  CHECK(code_of([] { parse_pd("not json"); }) == Errc::MalformedInput);
  CHECK(code_of([] { parse_pd("{\"crossing\": []}"); }) == Errc::MalformedInput);
  CHECK(code_of([] { parse_pd("{\"crossings\": [[1,2,3]]}"); }) == Errc::MalformedInput);
  CHECK(code_of([] { parse_pd("[[1,2,2,0]]"); }) == Errc::MalformedInput);
  CHECK(code_of([] { parse_pd("[[1,2,2,1.5]]"); }) == Errc::MalformedInput);
  CHECK(code_of([] { parse_pd("42"); }) == Errc::MalformedInput);
}

TEST_CASE("object form carries surgery slopes") {
  PDCode pd = parse_pd(
      "{\"crossings\": [[1,3,2,4],[3,1,4,2]], \"surgery\": [\"3/4\", null]}");
  CHECK(pd.crossing_count() == 2);
  REQUIRE(pd.components.size() == 2);
  REQUIRE(pd.surgery.size() == 2);
  REQUIRE(pd.surgery[0].has_value());
  CHECK(pd.surgery[0]->num == 3);
  CHECK(pd.surgery[0]->den == 4);
  CHECK(!pd.surgery[1].has_value());
}

TEST_CASE("surgery list length must match components") {
  CHECK(code_of([] {
          parse_pd("{\"crossings\": [[1,3,2,4],[3,1,4,2]], \"surgery\": [\"1/2\"]}");
        }) == Errc::MalformedInput);
}

TEST_CASE("slope strings") {
  CHECK(parse_slope("inf") == Rational{1, 0});
  CHECK(parse_slope("3/4") == Rational{3, 4});
  CHECK(parse_slope("-3/4") == Rational{-3, 4});
  CHECK(parse_slope("5") == Rational{5, 1});
  CHECK(parse_slope("0") == Rational{0, 1});
  CHECK(code_of([] { parse_slope("2/4"); }) == Errc::BadCoefficient);
  CHECK(code_of([] { parse_slope("3/0"); }) == Errc::BadCoefficient);
  CHECK(code_of([] { parse_slope("3/-4"); }) == Errc::BadCoefficient);
  CHECK(code_of([] { parse_slope("x/y"); }) == Errc::BadCoefficient);
}

TEST_CASE("hopf link traces two components") {
  PDCode pd = parse_pd("[[1,3,2,4],[3,1,4,2]]");
  REQUIRE(pd.components.size() == 2);
  CHECK(pd.components[0].size() == 2);
  CHECK(pd.components[1].size() == 2);
}
