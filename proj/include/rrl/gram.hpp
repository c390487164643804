#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rrl/linalg.hpp"
#include "rrl/multipoly.hpp"

namespace rrl {

// All degree-d monomials in n variables, descending graded-lex.
struct MonomialBasis {
  std::size_t n = 0;
  unsigned d = 0;
  std::vector<Monomial> monomials;

  std::size_t size() const { return monomials.size(); }
};

MonomialBasis monomial_basis(std::size_t n, unsigned d);

// m(z): the basis monomials evaluated at z.
RationalVector monomial_vector(const MonomialBasis& basis, std::span<const Rational> z);
IntegerVector monomial_vector(const MonomialBasis& basis, std::span<const Integer> z);

// Coefficient-matching row for one degree-2d monomial: target equals
// sum over pairs (i <= j) of weight(i, j) * Q(i, j), weight 1 on the
// diagonal and 2 off it.
struct GramConstraint {
  Monomial gamma;
  Rational target;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

// Exact face: primitive integer vectors spanning the admissible column space.
struct Face {
  std::vector<IntegerVector> basis;
  std::size_t zero_count = 0;

  std::size_t dim() const { return basis.size(); }
};

struct GramProblem {
  MonomialBasis basis;
  MultiPoly target;
  std::vector<GramConstraint> constraints;
  // pair_constraint(i, j): index of the constraint containing the pair (i, j).
  Matrix<std::size_t> pair_constraint;
  std::optional<Face> face;

  std::size_t constraint_of(const Monomial& gamma) const;
};

// Throws UsageError unless p is homogeneous of even degree.
GramProblem gram_system(const MultiPoly& p);

// Exact check of every coefficient-matching constraint for a symmetric Q.
bool satisfies_constraints(const GramProblem& prob, const Matrix<Rational>& q);

// m^T Q m expanded.
MultiPoly gram_polynomial(const MonomialBasis& basis, const Matrix<Rational>& q);

// Coefficients (indexed by constraint) of the product of two basis-space
// vectors viewed as polynomials w . m.
RationalVector product_coefficients(const GramProblem& prob, const RationalVector& a, const RationalVector& b);

MultiPoly basis_polynomial(const MonomialBasis& basis, const RationalVector& coeffs);

}  // namespace rrl
