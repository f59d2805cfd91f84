#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linkwidth/bounds.hpp"
#include "linkwidth/separator.hpp"

namespace linkwidth {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct SelfCheckReport {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  bool all_ok = true;
};

// Constant identities, closed-form spot values, the universal-constant
// suprema, and a seeded mini property suite (20 triangulations, 20 random
// diagrams). Passing a non-standard constants bundle is the negative
// control: the value checks must then fail.
SelfCheckReport run_selfcheck(std::uint64_t seed,
                              const BoundConstants& bc = BoundConstants::standard());

// True iff s/part1/part2 partition the vertices, no edge joins the parts,
// |s| <= sqrt(8n), and both parts have size <= 2n/3.
bool separator_invariants_ok(const CombinatorialMap& m, const SeparatorResult& r);

}  // namespace linkwidth
