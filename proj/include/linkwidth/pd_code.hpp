#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "linkwidth/combinatorial_map.hpp"
#include "linkwidth/rational.hpp"

namespace linkwidth {

// A link diagram in planar-diagram form. `labels` keeps the tuples as given;
// `crossings` holds the same tuples with edge labels normalized to 0..E-1 in
// increasing label order. Components are edge-id cycles traced through the
// crossings, listed by smallest edge id; `surgery` is aligned to them.
struct PDCode {
  std::vector<std::array<int, 4>> labels;
  std::vector<std::array<int, 4>> crossings;
  std::vector<std::vector<int>> components;
  std::vector<std::optional<Rational>> surgery;

  int crossing_count() const { return static_cast<int>(labels.size()); }
  int edge_count() const { return 2 * crossing_count(); }
};

// Accepts either a bare JSON array of 4-tuples or an object
// {"crossings": [...], "surgery": ["p/q"|"p"|"inf"|null, ...]}.
// Surgery strings must be in lowest terms with positive denominator.
PDCode parse_pd(const std::string& text);

// Validates incidence, normalizes labels, and traces components.
PDCode pd_from_tuples(std::vector<std::array<int, 4>> tuples);

Rational parse_slope(const std::string& text);

// Map with one vertex per crossing, rotations in tuple order.
CombinatorialMap build_map(const PDCode& pd);

}  // namespace linkwidth
