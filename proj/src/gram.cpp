#include "rrl/gram.hpp"

#include "rrl/errors.hpp"

namespace rrl {

MonomialBasis monomial_basis(std::size_t n, unsigned d) {
  if (n == 0) throw UsageError("monomial basis needs at least one variable");
  return {n, d, monomials_of_degree(n, d)};
}

RationalVector monomial_vector(const MonomialBasis& basis, std::span<const Rational> z) {
  if (z.size() != basis.n) throw UsageError("point dimension does not match the basis");
  RationalVector out;
  out.reserve(basis.size());
  for (const auto& m : basis.monomials) out.push_back(evaluate(MultiPoly::term(m, Rational(1)), z));
  return out;
}

IntegerVector monomial_vector(const MonomialBasis& basis, std::span<const Integer> z) {
  if (z.size() != basis.n) throw UsageError("point dimension does not match the basis");
  IntegerVector out;
  out.reserve(basis.size());
  for (const auto& m : basis.monomials) {
    Integer v = 1;
    for (std::size_t i = 0; i < z.size(); ++i) {
      for (unsigned k = 0; k < m[i]; ++k) v *= z[i];
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t GramProblem::constraint_of(const Monomial& gamma) const {
  // Constraints follow descending graded-lex order of gamma.
  std::size_t lo = 0, hi = constraints.size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (constraints[mid].gamma == gamma) return mid;
    if (constraints[mid].gamma > gamma) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  throw UsageError("monomial is not a Gram constraint");
}

GramProblem gram_system(const MultiPoly& p) {
  if (p.is_zero()) throw UsageError("Gram system of the zero polynomial");
  if (!p.is_homogeneous()) throw UsageError("Gram system needs a homogeneous polynomial");
  const unsigned deg = *p.degree();
  if (deg % 2 != 0) throw UsageError("Gram system needs even degree");
  GramProblem prob;
  prob.basis = monomial_basis(p.var_count(), deg / 2);
  prob.target = p;
  const auto gammas = monomials_of_degree(p.var_count(), deg);
  for (const auto& g : gammas) prob.constraints.push_back({g, p.coefficient(g), {}});
  const std::size_t n = prob.basis.size();
  prob.pair_constraint = Matrix<std::size_t>(n, n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const std::size_t c = prob.constraint_of(prob.basis.monomials[i] * prob.basis.monomials[j]);
      prob.constraints[c].pairs.emplace_back(i, j);
      prob.pair_constraint(i, j) = c;
      prob.pair_constraint(j, i) = c;
    }
  }
  return prob;
}

bool satisfies_constraints(const GramProblem& prob, const Matrix<Rational>& q) {
  const std::size_t n = prob.basis.size();
  if (q.rows() != n || q.cols() != n) throw UsageError("Gram matrix size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (q(i, j) != q(j, i)) return false;
    }
  }
  for (const auto& c : prob.constraints) {
    Rational sum = 0;
    for (auto [i, j] : c.pairs) sum += (i == j ? 1 : 2) * q(i, j);
    if (sum != c.target) return false;
  }
  return true;
}

MultiPoly gram_polynomial(const MonomialBasis& basis, const Matrix<Rational>& q) {
  MultiPoly::TermMap terms;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (q(i, j) == 0) continue;
      terms[basis.monomials[i] * basis.monomials[j]] += q(i, j);
    }
  }
  return MultiPoly(basis.n, std::move(terms));
}

RationalVector product_coefficients(const GramProblem& prob, const RationalVector& a, const RationalVector& b) {
  const std::size_t n = prob.basis.size();
  RationalVector out(prob.constraints.size(), Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] != 0) out[prob.pair_constraint(i, j)] += a[i] * b[j];
    }
  }
  return out;
}

MultiPoly basis_polynomial(const MonomialBasis& basis, const RationalVector& coeffs) {
  MultiPoly::TermMap terms;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coeffs[i] != 0) terms.emplace(basis.monomials[i], coeffs[i]);
  }
  return MultiPoly(basis.n, std::move(terms));
}

}  // namespace rrl
