#include "rrl/sampling.hpp"

#include "rrl/errors.hpp"

namespace rrl {

std::int64_t Sampler::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw UsageError("empty sampling range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1u;
  if (span == 0) return static_cast<std::int64_t>(engine_());  // full 64-bit range
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % span);
}

Rational Sampler::fixed_denominator(std::int64_t bound, std::int64_t den) {
  Rational q(static_cast<long>(uniform_int(-bound, bound)), static_cast<unsigned long>(den));
  q.canonicalize();
  return q;
}

std::vector<Rational> Sampler::point(std::size_t n, std::int64_t bound, std::int64_t den) {
  std::vector<Rational> p;
  p.reserve(n);
  for (std::size_t i = 0; i < n; ++i) p.push_back(fixed_denominator(bound, den));
  return p;
}

}  // namespace rrl
