#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rrl/gram.hpp"

namespace rrl {

// Restricts the Gram problem to vectors w with w . m(z) = 0 for every zero z.
// Intersects with an existing face. Throws UsageError naming the first point
// that is not a zero of the target.
GramProblem facial_reduce(const GramProblem& prob, const std::vector<RationalVector>& zeros);

// True when every face vector annihilates m(z) for every listed point.
bool face_annihilates(const GramProblem& prob, const std::vector<RationalVector>& zeros);

struct FaceStep {
  std::size_t zeros_used = 0;
  std::size_t face_dim = 0;
};

struct FaceTrace {
  GramProblem problem;
  std::vector<FaceStep> steps;
  bool stabilized = false;
};

// Next batch of zeros of the requested size.
using ZeroBatchSource = std::function<std::vector<RationalVector>(std::size_t)>;

// Feeds batches until `stable_after` consecutive batches leave the face
// dimension unchanged, or `max_batches` is reached.
FaceTrace reduce_until_stable(GramProblem prob, const ZeroBatchSource& next, std::size_t batch = 20,
                              std::size_t stable_after = 3, std::size_t max_batches = 40);

inline constexpr std::uint64_t kSpanPrime = (std::uint64_t{1} << 61) - 1;

// Linear functional on coefficient space, keyed by constraint index.
using CoefficientFunctional = std::vector<std::pair<std::size_t, Rational>>;

// The columns [w_a w_b (a <= b) | target] restricted to `rows` form a square
// matrix that is nonsingular mod `prime`, so the target is outside the span
// of the face products over Q. `functional` (when present) vanishes on every
// product and is nonzero on the target.
// When `functional` is present it alone is the proof; `rows` then index its
// support and `columns` the independent products used to find it.
struct SpanWitness {
  std::uint64_t prime = kSpanPrime;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> columns;
  std::optional<CoefficientFunctional> functional;
};

enum class SpanVerdict { NotInSpan, Inconclusive };

struct SpanCheck {
  SpanVerdict verdict = SpanVerdict::Inconclusive;
  std::size_t face_dim = 0;
  std::size_t products = 0;
  std::size_t rank_mod_p = 0;
  bool exact_decision = false;  // Inconclusive with this set means target in span
  std::optional<SpanWitness> witness;
  std::string reason;
};

// Requires a face. Full column rank of the augmented product matrix mod p
// decides non-membership directly; otherwise, up to `exact_limit` products,
// the question is settled by exact elimination.
SpanCheck exact_span_check(const GramProblem& prob, std::size_t functional_limit = 64,
                           std::size_t exact_limit = 400);

bool verify_span_witness(const GramProblem& prob, const SpanWitness& witness);

Rational apply_functional(const CoefficientFunctional& ell, const RationalVector& coeffs);

// Target coefficients indexed by constraint.
RationalVector target_coefficients(const GramProblem& prob);

}  // namespace rrl
