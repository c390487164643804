#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "rrl/matrix.hpp"
#include "rrl/monomial.hpp"
#include "rrl/rational.hpp"

namespace rrl {

// Sparse multivariate polynomial over Q. Terms are kept in descending
// graded-lex order and zero coefficients are never stored.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexDescending>;

  explicit MultiPoly(std::size_t var_count = 1);
  MultiPoly(std::size_t var_count, TermMap terms);

  static MultiPoly constant(std::size_t var_count, const Rational& c);
  static MultiPoly variable(std::size_t var_count, std::size_t var);
  static MultiPoly term(const Monomial& m, const Rational& c);
  // Linear form sum_j coeffs[j] * x_j.
  static MultiPoly linear(std::span<const Rational> coeffs);

  std::size_t var_count() const { return var_count_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Total degree; empty for the zero polynomial.
  std::optional<unsigned> degree() const;
  bool is_homogeneous() const;
  Rational coefficient(const Monomial& m) const;

  // gcd of numerators over lcm of denominators, positive; zero for 0.
  Rational content() const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& p, const MultiPoly& q);
  friend MultiPoly operator-(const MultiPoly& p, const MultiPoly& q);
  friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q);
  friend MultiPoly operator*(const Rational& c, const MultiPoly& p);
  friend MultiPoly operator*(const MultiPoly& p, const Rational& c) { return c * p; }

  MultiPoly pow(unsigned e) const;

  friend bool operator==(const MultiPoly& p, const MultiPoly& q);

 private:
  std::size_t var_count_;
  TermMap terms_;
};

MultiPoly pow(const MultiPoly& p, unsigned e);

Rational evaluate(const MultiPoly& p, std::span<const Rational> point);

MultiPoly partial_derivative(const MultiPoly& p, std::size_t var);

// Symbolic Hessian, entries (i, j) = d^2 p / dx_i dx_j.
Matrix<MultiPoly> hessian(const MultiPoly& p);

Matrix<Rational> hessian_at(const MultiPoly& p, std::span<const Rational> point);
Matrix<Rational> evaluate(const Matrix<MultiPoly>& m, std::span<const Rational> point);

// Fast exact evaluation at integer points. Coefficients are scaled to integers
// once; `evaluate` returns the scaled value, `scale()` the positive factor
// (value at x equals evaluate(x) / scale()).
class IntegerEvaluator {
 public:
  explicit IntegerEvaluator(const MultiPoly& p);
  Integer evaluate(std::span<const Integer> point) const;
  const Integer& scale() const { return scale_; }

 private:
  std::size_t var_count_;
  unsigned max_exp_ = 0;
  std::vector<Integer> coeffs_;
  std::vector<std::vector<unsigned>> exps_;
  Integer scale_;
};

}  // namespace rrl
