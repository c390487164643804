#include "rrl/linalg.hpp"

#include <numeric>

namespace rrl {

Echelon fraction_free_echelon(Matrix<Integer> a) {
  Echelon e;
  const std::size_t rows = a.rows(), cols = a.cols();
  e.row_order.resize(rows);
  std::iota(e.row_order.begin(), e.row_order.end(), std::size_t{0});
  Integer prev = 1;
  std::size_t r = 0;
  Integer t;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Smallest nonzero candidate keeps intermediate growth down.
    std::size_t best = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (a(i, c) == 0) continue;
      if (best == rows || mpz_sizeinbase(a(i, c).get_mpz_t(), 2) <
                              mpz_sizeinbase(a(best, c).get_mpz_t(), 2)) {
        best = i;
      }
    }
    if (best == rows) continue;
    a.swap_rows(r, best);
    std::swap(e.row_order[r], e.row_order[best]);
    const Integer piv = a(r, c);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Integer factor = a(i, c);
      for (std::size_t j = 0; j < cols; ++j) {
        if (j == c) continue;
        t = piv * a(i, j);
        if (factor != 0) t -= factor * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = piv;
    e.pivot_cols.push_back(c);
    ++r;
  }
  // Earlier pivot rows were rescaled to the final pivot; the last row is already there.
  e.common_pivot = prev;
  e.reduced = std::move(a);
  return e;
}

Matrix<Integer> clear_row_denominators(const Matrix<Rational>& m) {
  Matrix<Integer> out(m.rows(), m.cols(), Integer(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Integer v = l / m(i, j).get_den();
      out(i, j) = v * m(i, j).get_num();
    }
  }
  return out;
}

Integer determinant(const Matrix<Integer>& input) {
  if (!input.is_square()) throw UsageError("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  Matrix<Integer> a = input;
  Integer prev = 1, t;
  int sgn = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        t = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sgn > 0 ? Integer(a(n - 1, n - 1)) : Integer(-a(n - 1, n - 1));
}

Rational determinant(const Matrix<Rational>& m) {
  if (!m.is_square()) throw UsageError("determinant of a non-square matrix");
  Rational scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    }
    scale *= l;
  }
  Rational d(determinant(clear_row_denominators(m)));
  return d / scale;
}

MultiPoly determinant(const Matrix<MultiPoly>& m) {
  if (!m.is_square()) throw UsageError("determinant of a non-square matrix");
  const std::size_t vars = m.rows() ? m(0, 0).var_count() : 1;
  return expansion_determinant(m, MultiPoly(vars), MultiPoly::constant(vars, Rational(1)));
}

std::size_t exact_rank(const Matrix<Integer>& m) {
  return fraction_free_echelon(m).pivot_cols.size();
}

std::size_t exact_rank(const Matrix<Rational>& m) {
  return exact_rank(clear_row_denominators(m));
}

std::vector<RationalVector> exact_kernel(const Matrix<Rational>& m) {
  const Echelon e = fraction_free_echelon(clear_row_denominators(m));
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) {
      Rational entry(e.reduced(k, f), e.common_pivot);
      entry.canonicalize();
      v[e.pivot_cols[k]] = -entry;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

IntegerVector primitive_integer(const RationalVector& v) {
  Integer l = 1, g = 0;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  IntegerVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = (l / v[i].get_den()) * v[i].get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g > 1) {
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  return out;
}

RationalVector to_rational(const IntegerVector& v) {
  RationalVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

std::optional<std::vector<RankOneTerm>> psd_factor(const Matrix<Rational>& input) {
  if (!input.is_square()) throw UsageError("PSD factor needs a square matrix");
  const std::size_t n = input.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (input(i, j) != input(j, i)) return std::nullopt;
    }
  }
  Matrix<Rational> a = input;
  std::vector<bool> active(n, true);
  std::vector<RankOneTerm> terms;
  while (true) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      if (a(i, i) < 0) return std::nullopt;
      if (a(i, i) > 0 && piv == n) piv = i;
    }
    if (piv == n) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (active[i] && active[j] && a(i, j) != 0) return std::nullopt;
        }
      }
      return terms;
    }
    const Rational d = a(piv, piv);
    RankOneTerm t{d, RationalVector(n, Rational(0))};
    for (std::size_t j = 0; j < n; ++j) {
      if (active[j]) t.vector[j] = a(piv, j) / d;
    }
    active[piv] = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i] || a(i, piv) == 0) continue;
      const Rational f = a(i, piv) / d;
      for (std::size_t j = 0; j < n; ++j) {
        if (active[j]) a(i, j) -= f * a(piv, j);
      }
    }
    terms.push_back(std::move(t));
  }
}

ExactSolver::ExactSolver(const Matrix<Rational>& a, const RationalVector& b) : unknowns_(a.cols()) {
  if (b.size() != a.rows()) throw UsageError("right-hand side length mismatch");
  Matrix<Rational> aug(a.rows(), a.cols() + 1, Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const Echelon e = fraction_free_echelon(clear_row_denominators(aug));
  std::vector<bool> is_pivot(unknowns_, false);
  for (std::size_t c : e.pivot_cols) {
    if (c == unknowns_) {
      consistent_ = false;
    } else {
      pivot_cols_.push_back(c);
      is_pivot[c] = true;
    }
  }
  for (std::size_t c = 0; c < unknowns_; ++c) {
    if (!is_pivot[c]) free_cols_.push_back(c);
  }
  rref_ = Matrix<Rational>(pivot_cols_.size(), unknowns_ + 1, Rational(0));
  for (std::size_t k = 0; k < pivot_cols_.size(); ++k) {
    for (std::size_t j = 0; j <= unknowns_; ++j) {
      if (e.reduced(k, j) == 0) continue;
      Rational q(e.reduced(k, j), e.common_pivot);
      q.canonicalize();
      rref_(k, j) = q;
    }
  }
}

RationalVector ExactSolver::solve(const RationalVector& free_values) const {
  if (!consistent_) throw DomainError("linear system is inconsistent");
  if (free_values.size() != free_cols_.size()) throw UsageError("free value count mismatch");
  RationalVector x(unknowns_, Rational(0));
  for (std::size_t f = 0; f < free_cols_.size(); ++f) x[free_cols_[f]] = free_values[f];
  for (std::size_t k = 0; k < pivot_cols_.size(); ++k) {
    Rational v = rref_(k, unknowns_);
    for (std::size_t f = 0; f < free_cols_.size(); ++f) {
      const std::size_t c = free_cols_[f];
      if (rref_(k, c) != 0 && free_values[f] != 0) v -= rref_(k, c) * free_values[f];
    }
    x[pivot_cols_[k]] = v;
  }
  return x;
}

RationalVector ExactSolver::particular() const {
  return solve(RationalVector(free_cols_.size(), Rational(0)));
}

PsdReport check_psd(const Matrix<Rational>& input) {
  if (!input.is_square()) throw UsageError("PSD check needs a square matrix");
  const std::size_t n = input.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (input(i, j) != input(j, i)) return {false, 0};
    }
  }
  Matrix<Rational> a = input;
  std::vector<bool> active(n, true);
  PsdReport report{true, 0};
  while (true) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      if (a(i, i) < 0) return {false, 0};
      if (a(i, i) > 0 && piv == n) piv = i;
    }
    if (piv == n) {
      // Zero diagonal on the remaining block forces the block to vanish.
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (active[i] && active[j] && a(i, j) != 0) return {false, 0};
        }
      }
      return report;
    }
    active[piv] = false;
    ++report.rank;
    const Rational d = a(piv, piv);
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i] || a(i, piv) == 0) continue;
      const Rational f = a(i, piv) / d;
      for (std::size_t j = 0; j < n; ++j) {
        if (active[j]) a(i, j) -= f * a(piv, j);
      }
    }
  }
}

Matrix<Rational> multiply(const Matrix<Rational>& a, const Matrix<Rational>& b) {
  if (a.cols() != b.rows()) throw UsageError("matrix product dimension mismatch");
  Matrix<Rational> c(a.rows(), b.cols(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

RationalVector multiply(const Matrix<Rational>& a, const RationalVector& x) {
  if (a.cols() != x.size()) throw UsageError("matrix-vector dimension mismatch");
  RationalVector y(a.rows(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0) y[i] += a(i, j) * x[j];
    }
  }
  return y;
}

}  // namespace rrl
