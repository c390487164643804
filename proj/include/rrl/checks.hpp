#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rrl/linalg.hpp"
#include "rrl/multipoly.hpp"
#include "rrl/sampling.hpp"

namespace rrl {

struct NonnegativityReport {
  std::size_t samples = 0;
  std::size_t negatives = 0;
  Rational min_value;
  RationalVector argmin;
};

// Exact values of a homogeneous polynomial at `count` seeded points with
// numerators in [-bound, bound] over the denominator `den`.
NonnegativityReport sample_nonnegativity(const MultiPoly& p, std::size_t count, Sampler& sampler,
                                         std::int64_t bound = kSampleBound, std::int64_t den = kSampleDenominator);

struct ZeroDiagnostics {
  Rational value;          // p at the point; expected exactly 0
  bool hessian_psd = false;
  std::size_t hessian_rank = 0;
  std::size_t minors5_checked = 0;
  bool all_minors5_vanish = false;
  bool some_minor4_nonzero = false;
};

// Second-order structure of a polynomial at exact points, with the symbolic
// Hessian computed once.
class HessianProbe {
 public:
  explicit HessianProbe(const MultiPoly& p);

  const Matrix<MultiPoly>& symbolic() const { return hessian_; }
  Matrix<Rational> at(std::span<const Rational> point) const;
  ZeroDiagnostics analyze(std::span<const Rational> point) const;

 private:
  MultiPoly poly_;
  Matrix<MultiPoly> hessian_;
};

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

}  // namespace rrl
