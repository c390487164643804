#include "rrl/complex_poly.hpp"

#include "rrl/errors.hpp"

namespace rrl {

ComplexScalar pow(const ComplexScalar& z, unsigned e) {
  ComplexScalar r{1, 0};
  for (unsigned k = 0; k < e; ++k) r = r * z;
  return r;
}

ComplexScalar evaluate(const ComplexPoly& p, std::span<const Rational> point) {
  return {evaluate(p.re, point), evaluate(p.im, point)};
}

ComplexUniPoly::ComplexUniPoly(std::vector<ComplexPoly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw UsageError("univariate polynomial needs at least one coefficient");
  for (const auto& c : coeffs_) {
    if (c.var_count() != coeffs_.front().var_count()) throw UsageError("coefficient variable count mismatch");
  }
}

ComplexUniPoly ComplexUniPoly::from_scalars(const std::vector<ComplexScalar>& coeffs, std::size_t var_count) {
  std::vector<ComplexPoly> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(ComplexPoly::constant(var_count, c));
  return ComplexUniPoly(std::move(out));
}

ComplexUniPoly operator*(const ComplexUniPoly& f, const ComplexUniPoly& g) {
  if (f.var_count() != g.var_count()) throw UsageError("coefficient variable count mismatch");
  std::vector<ComplexPoly> out(f.coeffs_.size() + g.coeffs_.size() - 1, ComplexPoly(f.var_count()));
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) out[i + j] = out[i + j] + f.coeffs_[i] * g.coeffs_[j];
  }
  return ComplexUniPoly(std::move(out));
}

ComplexScalar evaluate(const ComplexUniPoly& f, std::span<const Rational> point, const ComplexScalar& z) {
  ComplexScalar acc{0, 0};
  for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = acc * z + evaluate(f.coeff(i), point);
  return acc;
}

}  // namespace rrl
