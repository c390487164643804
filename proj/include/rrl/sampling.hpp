#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rrl/rational.hpp"

namespace rrl {

// Seeded source for every randomized choice. The engine is std::mt19937_64
// (bit-exact by the standard); integer ranges are drawn by rejection from its
// raw output rather than std::uniform_int_distribution, whose algorithm is
// implementation-defined. Same seed, same stream on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  // numerator uniform on [-bound, bound], fixed denominator `den`.
  Rational fixed_denominator(std::int64_t bound, std::int64_t den);

  std::vector<Rational> point(std::size_t n, std::int64_t bound, std::int64_t den);

  std::uint64_t next_raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// Sampling defaults for nonnegativity checks: numerators in [-10^4, 10^4]
// over the fixed denominator 10^4.
inline constexpr std::int64_t kSampleBound = 10000;
inline constexpr std::int64_t kSampleDenominator = 10000;

}  // namespace rrl
