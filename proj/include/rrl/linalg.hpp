#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "rrl/errors.hpp"
#include "rrl/matrix.hpp"
#include "rrl/multipoly.hpp"
#include "rrl/rational.hpp"

namespace rrl {

inline bool is_zero(const Rational& q) { return q == 0; }
inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

// Fraction-free Gauss-Jordan form of an integer matrix. Every pivot entry of
// `reduced` equals `common_pivot`, and reduced / common_pivot is the RREF.
struct Echelon {
  Matrix<Integer> reduced;
  std::vector<std::size_t> pivot_cols;
  std::vector<std::size_t> row_order;  // original index of each reduced row
  Integer common_pivot = 1;
};

Echelon fraction_free_echelon(Matrix<Integer> a);

// Each row multiplied by the lcm of its denominators.
Matrix<Integer> clear_row_denominators(const Matrix<Rational>& m);

Integer determinant(const Matrix<Integer>& m);
Rational determinant(const Matrix<Rational>& m);
MultiPoly determinant(const Matrix<MultiPoly>& m);

std::size_t exact_rank(const Matrix<Rational>& m);
std::size_t exact_rank(const Matrix<Integer>& m);

// Right null space basis; vector k has a 1 in the k-th free column.
std::vector<RationalVector> exact_kernel(const Matrix<Rational>& m);

// Rescales a nonzero rational vector to an integer vector with content 1 and
// the same direction. The zero vector maps to zeros.
IntegerVector primitive_integer(const RationalVector& v);
RationalVector to_rational(const IntegerVector& v);

struct PsdReport {
  bool psd = false;
  std::size_t rank = 0;  // meaningful only when psd
};

// Exact PSD test by symmetric elimination on positive diagonal pivots.
PsdReport check_psd(const Matrix<Rational>& m);

struct RankOneTerm {
  Rational weight;
  RationalVector vector;
};

// Q = sum weight * v v^T with positive weights; nullopt unless Q is PSD.
std::optional<std::vector<RankOneTerm>> psd_factor(const Matrix<Rational>& m);

// Exact affine solution set of A x = b in RREF form.
class ExactSolver {
 public:
  ExactSolver(const Matrix<Rational>& a, const RationalVector& b);

  bool consistent() const { return consistent_; }
  std::size_t unknowns() const { return unknowns_; }
  const std::vector<std::size_t>& pivot_cols() const { return pivot_cols_; }
  const std::vector<std::size_t>& free_cols() const { return free_cols_; }
  // Solution with free variables set to `free_values` (ordered as free_cols).
  RationalVector solve(const RationalVector& free_values) const;
  RationalVector particular() const;

 private:
  bool consistent_ = true;
  std::size_t unknowns_ = 0;
  std::vector<std::size_t> pivot_cols_;
  std::vector<std::size_t> free_cols_;
  // rref_(k, .) over pivot rows, last column the right-hand side.
  Matrix<Rational> rref_;
};

Matrix<Rational> multiply(const Matrix<Rational>& a, const Matrix<Rational>& b);
RationalVector multiply(const Matrix<Rational>& a, const RationalVector& x);

// Determinant by row expansion over column subsets, memoized per subset.
// Division-free, so it works over any commutative ring; sized for n <= 16.
template <class T>
T expansion_determinant(const Matrix<T>& m, const T& zero, const T& one) {
  if (!m.is_square()) throw UsageError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return one;
  if (n > 16) throw UsageError("expansion determinant limited to 16x16");
  const std::uint32_t full = (1u << n) - 1u;
  std::vector<std::optional<T>> level(std::size_t(1) << n);
  level[0] = one;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::optional<T>> next(std::size_t(1) << n);
    for (std::uint32_t s = 0; s <= full; ++s) {
      if (!level[s] || static_cast<std::size_t>(std::popcount(s)) != k) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (s & (1u << j)) continue;
        if (is_zero(m(k, j))) continue;
        const std::uint32_t t = s | (1u << j);
        const int above = std::popcount(t >> (j + 1));
        T contrib = m(k, j) * *level[s];
        if (above % 2) contrib = -contrib;
        if (next[t]) {
          *next[t] = *next[t] + contrib;
        } else {
          next[t] = std::move(contrib);
        }
      }
    }
    level = std::move(next);
  }
  return level[full] ? *level[full] : zero;
}

}  // namespace rrl
