#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "linkwidth/bounds.hpp"

namespace linkwidth {

inline constexpr const char* kToolVersion = "0.1.0";

// Round to 6 significant digits, the precision every reported real carries.
double sig6(double x);

// FNV-1a 64-bit content hash, 16 hex digits; stable across reruns.
std::string content_digest(const std::string& bytes);

// {command, inputDigest, toolVersion, payload, warnings} in that order.
nlohmann::ordered_json report_envelope(const std::string& command,
                                       const std::string& input_digest,
                                       nlohmann::ordered_json payload,
                                       const std::vector<std::string>& warnings);

// Fixed-field-order serialization of a bounds report; optional fields are
// emitted as null so the schema is stable.
nlohmann::ordered_json bounds_report_json(const BoundsReport& r);

std::string dump_report(const nlohmann::ordered_json& j);

}  // namespace linkwidth
