#include "doctest.h"

#include <string>
#include <vector>

#include "linkwidth/bounds.hpp"
#include "linkwidth/pd_code.hpp"
#include "linkwidth/report_json.hpp"

using namespace linkwidth;

TEST_CASE("six significant digits") {
  CHECK(sig6(0.0) == 0.0);
  CHECK(sig6(2.0) == 2.0);
  CHECK(sig6(539.7781234) == 539.778);
  CHECK(sig6(125.307877) == 125.308);
  CHECK(sig6(0.000123456789) == 0.000123457);
  CHECK(sig6(-61.65393) == -61.6539);
  CHECK(sig6(1642.9641) == 1642.96);
  CHECK(sig6(sig6(1234567.0)) == sig6(1234567.0));
}

TEST_CASE("content digest is the 64-bit fnv-1a hex") {
  CHECK(content_digest("") == "cbf29ce484222325");
  CHECK(content_digest("a") == "af63dc4c8601ec8c");
  CHECK(content_digest("[[1,2,2,1]]") == content_digest("[[1,2,2,1]]"));
  CHECK(content_digest("[[1,2,2,1]]") != content_digest("[[1,2,2,1]]\n"));
  CHECK(content_digest("hello").size() == 16);
}

TEST_CASE("envelope fields come in schema order") {
  nlohmann::ordered_json payload;
  payload["x"] = 1;
  nlohmann::ordered_json env = report_envelope("analyze", "O0", payload, {"warned"});
  std::vector<std::string> keys;
  for (auto it = env.begin(); it != env.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"command", "inputDigest", "toolVersion", "payload",
                                         "warnings"});
  CHECK(env["toolVersion"] == kToolVersion);
  CHECK(env["payload"]["x"] == 1);
  CHECK(env["warnings"] == std::vector<std::string>{"warned"});
}

TEST_CASE("dump uses two-space indent and a trailing newline") {
  nlohmann::ordered_json env = report_envelope("gen", "", {}, {});
  std::string text = dump_report(env);
  CHECK(text.substr(0, 14) == "{\n  \"command\":");
  CHECK(text.back() == '\n');
  CHECK(text.find("\"inputDigest\": \"\"") != std::string::npos);
}

TEST_CASE("bounds report serializes with a fixed schema") {
  BoundsReport r = full_report(parse_pd("[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]"),
                               2.02988, {});
  nlohmann::ordered_json j = bounds_report_json(r);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"t", "c", "widthT", "widthG", "maxWidthFormula",
                                         "maxWidthConstructive", "heegWidthBound", "cheegerBound",
                                         "lambda1Bound", "bridgeBound", "volumeInterval",
                                         "crossingLowerBound", "degenerateCyclicRegion",
                                         "classFlags"});
  CHECK(j["cheegerBound"].get<double>() == sig6(*r.cheegerBound));
  CHECK(j["volumeInterval"].is_null());
  CHECK(j["classFlags"]["alternating"] == false);

  BoundsReport bare = full_report(parse_pd("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]"),
                                  std::nullopt, {});
  nlohmann::ordered_json jb = bounds_report_json(bare);
  CHECK(jb["cheegerBound"].is_null());
  CHECK(jb["lambda1Bound"].is_null());
  CHECK(jb["crossingLowerBound"].is_null());
  CHECK(jb["degenerateCyclicRegion"] == true);
  CHECK(jb["t"] == 1);
  CHECK(jb["c"] == 3);
}

TEST_CASE("serialized reals carry six significant digits") {
  ClassFlags flags;
  flags.alternating = true;
  BoundsReport r = full_report(parse_pd("[[1,2,2,3],[3,4,4,5],[5,6,6,1]]"),
                               std::nullopt, flags);
  nlohmann::ordered_json j = bounds_report_json(r);
  CHECK(j["maxWidthFormula"].get<double>() == sig6(r.maxWidthFormula));
  CHECK(j["volumeInterval"]["lower"].get<double>() == 1.83195);
  CHECK(j["volumeInterval"]["upper"].get<double>() == 20.298);
}
