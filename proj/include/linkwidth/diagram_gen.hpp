#pragma once

#include <cstdint>

#include "linkwidth/pd_code.hpp"

namespace linkwidth {

// Random connected spherical diagram with exactly n crossings, grown from a
// single curl by repeated curl (one new crossing) and poke (two new
// crossings) insertions. Fully deterministic in (n, seed); n == 1 always
// yields the one-crossing curl [[1,2,2,1]].
PDCode random_diagram(int n, std::uint64_t seed);

}  // namespace linkwidth
