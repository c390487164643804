#include "rrl/resultant.hpp"

#include <algorithm>

#include "rrl/errors.hpp"
#include "rrl/linalg.hpp"

namespace rrl {

Matrix<ComplexPoly> sylvester_matrix(const ComplexUniPoly& f, const ComplexUniPoly& g) {
  const std::size_t m = f.declared_degree(), n = g.declared_degree();
  if (m == 0 && n == 0) throw UsageError("Sylvester matrix needs a positive declared degree");
  if (f.var_count() != g.var_count()) throw UsageError("coefficient variable count mismatch");
  const std::size_t size = m + n;
  Matrix<ComplexPoly> s(size, size, ComplexPoly(f.var_count()));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k <= m; ++k) s(r, r + k) = f.coeff(m - k);
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k <= n; ++k) s(n + r, r + k) = g.coeff(n - k);
  }
  return s;
}

Matrix<MultiPoly> real_part(const Matrix<ComplexPoly>& m) {
  Matrix<MultiPoly> r(m.rows(), m.cols(), MultiPoly(m.rows() ? m(0, 0).var_count() : 1));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).re;
  }
  return r;
}

Matrix<MultiPoly> imag_part(const Matrix<ComplexPoly>& m) {
  Matrix<MultiPoly> r(m.rows(), m.cols(), MultiPoly(m.rows() ? m(0, 0).var_count() : 1));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).im;
  }
  return r;
}

ComplexPoly determinant(const Matrix<ComplexPoly>& m) {
  const std::size_t vars = m.rows() ? m(0, 0).var_count() : 1;
  return expansion_determinant(m, ComplexPoly(vars), ComplexPoly::constant(vars, {1, 0}));
}

ComplexPoly resultant(const ComplexUniPoly& f, const ComplexUniPoly& g) {
  return determinant(sylvester_matrix(f, g));
}

Bracket bracket(const ComplexUniPoly& f, const ComplexUniPoly& g, std::size_t i, std::size_t j) {
  const std::size_t limit = std::min(f.declared_degree(), g.declared_degree());
  if (i > limit || j > limit) throw UsageError("bracket index out of range");
  return {i, j, f.coeff(i) * g.coeff(j) - g.coeff(i) * f.coeff(j)};
}

ComplexPoly bezout3_resultant(const ComplexUniPoly& f, const ComplexUniPoly& g) {
  if (f.declared_degree() != 3 || g.declared_degree() != 3) {
    throw UsageError("Cayley-Bezout formula needs two cubics");
  }
  auto b = [&](std::size_t i, std::size_t j) { return bracket(f, g, i, j).value; };
  Matrix<ComplexPoly> m(3, 3, ComplexPoly(f.var_count()));
  m(0, 0) = b(3, 0);
  m(0, 1) = b(3, 1);
  m(0, 2) = b(3, 2);
  m(1, 0) = b(2, 0);
  m(1, 1) = b(3, 0) + b(2, 1);
  m(1, 2) = b(3, 1);
  m(2, 0) = b(1, 0);
  m(2, 1) = b(2, 0);
  m(2, 2) = b(3, 0);
  return determinant(m);
}

int bezout_sylvester_sign() {
  static const int sign = [] {
    const auto f = ComplexUniPoly::from_scalars({{1, 0}, {0, 0}, {0, 0}, {1, 0}});
    const auto g = ComplexUniPoly::from_scalars({{1, 0}, {0, 0}, {0, 0}, {-1, 0}});
    const ComplexPoly syl = resultant(f, g);
    const ComplexPoly bez = bezout3_resultant(f, g);
    if (bez == syl) return 1;
    if (bez == -syl) return -1;
    throw ConsistencyError("Cayley-Bezout and Sylvester determinants differ beyond sign");
  }();
  return sign;
}

}  // namespace rrl
