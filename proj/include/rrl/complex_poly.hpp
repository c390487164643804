#pragma once

#include <cstddef>
#include <vector>

#include "rrl/multipoly.hpp"
#include "rrl/rational.hpp"

namespace rrl {

struct ComplexScalar {
  Rational re = 0;
  Rational im = 0;

  ComplexScalar conj() const { return {re, -im}; }
  Rational norm_sq() const { return re * re + im * im; }

  friend ComplexScalar operator+(const ComplexScalar& a, const ComplexScalar& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexScalar operator-(const ComplexScalar& a, const ComplexScalar& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexScalar operator*(const ComplexScalar& a, const ComplexScalar& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  ComplexScalar operator-() const { return {-re, -im}; }
  friend bool operator==(const ComplexScalar&, const ComplexScalar&) = default;
};

ComplexScalar pow(const ComplexScalar& z, unsigned e);

// Complex-valued polynomial in real variables, kept as a (re, im) pair.
struct ComplexPoly {
  MultiPoly re;
  MultiPoly im;

  explicit ComplexPoly(std::size_t var_count = 1) : re(var_count), im(var_count) {}
  ComplexPoly(MultiPoly r, MultiPoly i) : re(std::move(r)), im(std::move(i)) {}

  static ComplexPoly constant(std::size_t var_count, const ComplexScalar& c) {
    return {MultiPoly::constant(var_count, c.re), MultiPoly::constant(var_count, c.im)};
  }

  std::size_t var_count() const { return re.var_count(); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  ComplexPoly conj() const { return {re, -im}; }
  // |z|^2 = re^2 + im^2 as a real polynomial.
  MultiPoly norm_sq() const { return re * re + im * im; }

  friend ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  ComplexPoly operator-() const { return {-re, -im}; }
  friend bool operator==(const ComplexPoly&, const ComplexPoly&) = default;
};

inline bool is_zero(const ComplexPoly& p) { return p.is_zero(); }

ComplexScalar evaluate(const ComplexPoly& p, std::span<const Rational> point);

// Univariate polynomial in z with complex-symbolic coefficients; coeffs[i]
// multiplies z^i. The declared degree is coeffs.size() - 1 and is kept even
// when leading coefficients vanish.
class ComplexUniPoly {
 public:
  explicit ComplexUniPoly(std::vector<ComplexPoly> coeffs);
  static ComplexUniPoly from_scalars(const std::vector<ComplexScalar>& coeffs, std::size_t var_count = 1);

  std::size_t declared_degree() const { return coeffs_.size() - 1; }
  std::size_t var_count() const { return coeffs_.front().var_count(); }
  const ComplexPoly& coeff(std::size_t i) const { return coeffs_.at(i); }
  const std::vector<ComplexPoly>& coeffs() const { return coeffs_; }

  // Product in z; the declared degrees add.
  friend ComplexUniPoly operator*(const ComplexUniPoly& f, const ComplexUniPoly& g);

 private:
  std::vector<ComplexPoly> coeffs_;
};

// Evaluates sum_i coeff_i(point) z^i.
ComplexScalar evaluate(const ComplexUniPoly& f, std::span<const Rational> point, const ComplexScalar& z);

}  // namespace rrl
