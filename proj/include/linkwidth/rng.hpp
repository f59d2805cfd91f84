#pragma once

#include <cstdint>
#include <random>

namespace linkwidth {

// Deterministic RNG wrapper. mt19937_64 output is fully specified by the
// standard; the bounded draw uses plain modulo so the byte stream of any
// seeded run is identical across platforms (std::uniform_int_distribution
// gives no such guarantee).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform-ish integer in [0, bound). bound must be positive.
  int next_int(int bound) {
    return static_cast<int>(next_u64() % static_cast<std::uint64_t>(bound));
  }

  std::size_t next_index(std::size_t bound) {
    return static_cast<std::size_t>(next_u64() % static_cast<std::uint64_t>(bound));
  }

  bool next_bool_percent(int percent_true) { return next_int(100) < percent_true; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace linkwidth
