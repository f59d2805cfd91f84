#include "linkwidth/pd_code.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <utility>

#include "json.hpp"
#include "linkwidth/errors.hpp"

namespace linkwidth {

namespace {

long long parse_ll(std::string_view s) {
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw Error(Errc::BadCoefficient, "cannot parse integer '" + std::string(s) + "'");
  return v;
}

// Scan-order list of the two (crossing, position) ends of each edge id.
std::vector<std::array<std::pair<int, int>, 2>> collect_ends(
    const std::vector<std::array<int, 4>>& crossings, int edge_count) {
  std::vector<std::array<std::pair<int, int>, 2>> ends(edge_count);
  std::vector<int> seen(edge_count, 0);
  for (int c = 0; c < static_cast<int>(crossings.size()); c++) {
    for (int p = 0; p < 4; p++) {
      int e = crossings[c][p];
      ends[e][seen[e]++] = {c, p};
    }
  }
  return ends;
}

std::vector<std::vector<int>> trace_components(
    const std::vector<std::array<int, 4>>& crossings, int edge_count) {
  auto ends = collect_ends(crossings, edge_count);
  std::vector<std::vector<std::pair<int, int>>> end_at(crossings.size());
  for (auto& row : end_at) row.assign(4, {-1, -1});
  for (int e = 0; e < edge_count; e++)
    for (int k = 0; k < 2; k++) end_at[ends[e][k].first][ends[e][k].second] = {e, k};

  std::vector<std::vector<int>> comps;
  std::vector<char> visited(edge_count, 0);
  for (int e0 = 0; e0 < edge_count; e0++) {
    if (visited[e0]) continue;
    std::vector<int> cyc;
    int e = e0, heading = 1;
    do {
      visited[e] = 1;
      cyc.push_back(e);
      auto [c, p] = ends[e][heading];
      auto [e2, k2] = end_at[c][(p + 2) % 4];
      e = e2;
      heading = 1 - k2;
    } while (!(e == e0 && heading == 1));
    comps.push_back(std::move(cyc));
  }
  return comps;
}

}  // namespace

Rational parse_slope(const std::string& text) {
  if (text == "inf") return Rational{1, 0};
  std::string_view s = text;
  auto slash = s.find('/');
  long long num, den;
  if (slash == std::string_view::npos) {
    num = parse_ll(s);
    den = 1;
  } else {
    num = parse_ll(s.substr(0, slash));
    den = parse_ll(s.substr(slash + 1));
    if (den <= 0)
      throw Error(Errc::BadCoefficient, "denominator must be positive in '" + text + "'");
    if (std::gcd(num < 0 ? -num : num, den) != 1)
      throw Error(Errc::BadCoefficient, "slope '" + text + "' is not in lowest terms");
  }
  return Rational{num, den};
}

PDCode pd_from_tuples(std::vector<std::array<int, 4>> tuples) {
  PDCode pd;
  pd.labels = std::move(tuples);

  std::map<int, int> count;
  for (const auto& row : pd.labels)
    for (int x : row) count[x]++;
  for (const auto& [label, c] : count)
    if (c != 2)
      throw Error(Errc::BadIncidence, "edge label " + std::to_string(label) + " appears " +
                                          std::to_string(c) + " times (expected 2)");

  std::map<int, int> index;
  for (const auto& [label, c] : count) index.emplace(label, static_cast<int>(index.size()));
  for (const auto& row : pd.labels) {
    std::array<int, 4> norm{};
    for (int p = 0; p < 4; p++) norm[p] = index.at(row[p]);
    pd.crossings.push_back(norm);
  }

  pd.components = trace_components(pd.crossings, pd.edge_count());
  pd.surgery.assign(pd.components.size(), std::nullopt);
  return pd;
}

PDCode parse_pd(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(Errc::MalformedInput, std::string("invalid JSON: ") + ex.what());
  }

  nlohmann::json tuples_json;
  nlohmann::json surgery_json;
  if (doc.is_array()) {
    tuples_json = doc;
  } else if (doc.is_object()) {
    for (auto it = doc.begin(); it != doc.end(); ++it)
      if (it.key() != "crossings" && it.key() != "surgery")
        throw Error(Errc::MalformedInput, "unknown key '" + it.key() + "'");
    if (!doc.contains("crossings") || !doc["crossings"].is_array())
      throw Error(Errc::MalformedInput, "missing 'crossings' array");
    tuples_json = doc["crossings"];
    if (doc.contains("surgery")) surgery_json = doc["surgery"];
  } else {
    throw Error(Errc::MalformedInput, "document must be an array or object");
  }

  std::vector<std::array<int, 4>> tuples;
  for (const auto& t : tuples_json) {
    if (!t.is_array() || t.size() != 4)
      throw Error(Errc::MalformedInput, "crossing tuple must have 4 entries");
    std::array<int, 4> row{};
    for (int p = 0; p < 4; p++) {
      if (!t[p].is_number_integer() || t[p].get<long long>() < 1 ||
          t[p].get<long long>() > 1000000000)
        throw Error(Errc::MalformedInput, "edge labels must be positive integers");
      row[p] = t[p].get<int>();
    }
    tuples.push_back(row);
  }

  PDCode pd = pd_from_tuples(std::move(tuples));

  if (!surgery_json.is_null()) {
    if (!surgery_json.is_array())
      throw Error(Errc::MalformedInput, "'surgery' must be an array");
    if (surgery_json.size() != pd.components.size())
      throw Error(Errc::MalformedInput,
                  "surgery list has " + std::to_string(surgery_json.size()) + " entries for " +
                      std::to_string(pd.components.size()) + " components");
    for (size_t i = 0; i < surgery_json.size(); i++) {
      const auto& s = surgery_json[i];
      if (s.is_null()) continue;
      if (!s.is_string())
        throw Error(Errc::BadCoefficient, "surgery entries must be strings or null");
      pd.surgery[i] = parse_slope(s.get<std::string>());
    }
  }
  return pd;
}

CombinatorialMap build_map(const PDCode& pd) {
  int n = pd.crossing_count();
  if (n < 1) throw Error(Errc::DomainError, "build_map requires at least one crossing");
  int ne = pd.edge_count();
  auto ends = collect_ends(pd.crossings, ne);

  std::vector<std::array<int, 4>> dart_at(n, {-1, -1, -1, -1});
  for (int e = 0; e < ne; e++)
    for (int k = 0; k < 2; k++) dart_at[ends[e][k].first][ends[e][k].second] = 2 * e + k;

  CombinatorialMap m;
  m.vertex_count = n;
  m.sigma.assign(2 * ne, -1);
  m.vertex_of.assign(2 * ne, -1);
  for (int c = 0; c < n; c++) {
    for (int p = 0; p < 4; p++) {
      m.sigma[dart_at[c][p]] = dart_at[c][(p + 1) % 4];
      m.vertex_of[dart_at[c][p]] = c;
    }
  }
  if (!m.connected()) throw Error(Errc::Disconnected, "diagram is split");
  int f = faces(m).count();
  if (m.vertex_count - m.edge_count() + f != 2)
    throw Error(Errc::NonSpherical, "rotation system is not spherical");
  return m;
}

}  // namespace linkwidth
