#include "linkwidth/report_json.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>

namespace linkwidth {

double sig6(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return std::strtod(buf, nullptr);
}

std::string content_digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

nlohmann::ordered_json report_envelope(const std::string& command,
                                       const std::string& input_digest,
                                       nlohmann::ordered_json payload,
                                       const std::vector<std::string>& warnings) {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["inputDigest"] = input_digest;
  j["toolVersion"] = kToolVersion;
  j["payload"] = std::move(payload);
  j["warnings"] = warnings;
  return j;
}

nlohmann::ordered_json bounds_report_json(const BoundsReport& r) {
  nlohmann::ordered_json j;
  j["t"] = r.t;
  j["c"] = r.c;
  j["widthT"] = r.widthT;
  j["widthG"] = r.widthG;
  j["maxWidthFormula"] = sig6(r.maxWidthFormula);
  j["maxWidthConstructive"] = sig6(r.maxWidthConstructive);
  j["heegWidthBound"] = sig6(r.heegWidthBound);
  j["cheegerBound"] = r.cheegerBound ? nlohmann::ordered_json(sig6(*r.cheegerBound))
                                     : nlohmann::ordered_json(nullptr);
  j["lambda1Bound"] = r.lambda1Bound ? nlohmann::ordered_json(sig6(*r.lambda1Bound))
                                     : nlohmann::ordered_json(nullptr);
  j["bridgeBound"] = sig6(r.bridgeBound);
  if (r.volumeInterval) {
    j["volumeInterval"] = {{"lower", sig6(r.volumeInterval->lower)},
                           {"upper", sig6(r.volumeInterval->upper)}};
  } else {
    j["volumeInterval"] = nullptr;
  }
  j["crossingLowerBound"] = r.crossingLowerBound
                                ? nlohmann::ordered_json(sig6(*r.crossingLowerBound))
                                : nlohmann::ordered_json(nullptr);
  j["degenerateCyclicRegion"] = r.degenerateCyclicRegion;
  j["classFlags"] = {{"alternating", r.flags.alternating},
                     {"highlyTwisted", r.flags.highly_twisted},
                     {"tanglePrimeAttested", r.flags.tangle_prime_attested}};
  return j;
}

std::string dump_report(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace linkwidth
