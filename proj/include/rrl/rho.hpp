#pragma once

#include <cstddef>
#include <vector>

#include "rrl/bundle.hpp"
#include "rrl/sampling.hpp"

namespace rrl {

// The real resultant polynomial of a bundle, restricted to its real chart.
// Stored with integer coefficients of content 1 and the sign chosen so that
// the probe point evaluates positive.
struct RhoPolynomial {
  BundleSpec spec;
  MultiPoly poly;
  int normalization_sign = 1;  // applied to the raw resultant
  Rational removed_content;    // raw = normalization_sign * removed_content * poly
  RationalVector probe;        // first point where the raw resultant is nonzero
};

// Sign probe: for the odd flavor the section f = z^m + 1; otherwise, and as
// a fallback, integer points enumerated by growing max-norm radius.
RationalVector default_probe(const RealChart& chart);

RhoPolynomial build_rho(const BundleSpec& spec);
RhoPolynomial build_rho(const RealChart& chart);

// Bracket invariants of a cubic section pair on the odd O(3)+O(3) chart:
// r = [3,0], s = -[2,1], u = [3,1], v = [3,2].
struct BracketInvariants {
  MultiPoly r;
  MultiPoly s;
  ComplexPoly u;
  ComplexPoly v;
};

BracketInvariants bracket_invariants(const RealChart& chart);

// r^2 (r - s) + 2 r |u|^2 - (r - s)|v|^2 + u^2 conj(v) + conj(u)^2 v.
MultiPoly rho_closed_form(const BracketInvariants& inv);

// (r^2 - |v|^2)^2 + |r conj(u) + u conj(v)|^2, which equals r * rho.
MultiPoly rho_times_r_form(const BracketInvariants& inv);

// The r * rho identity divided through by r at a point. DomainError if r = 0.
Rational rho_rational_form(const BracketInvariants& inv, std::span<const Rational> point);

// r conj(u) + u conj(v), whose vanishing is forced at zeros of rho.
ComplexPoly zero_locus_expression(const BracketInvariants& inv);

// O(2)+O(2) with f = a + r z - conj(a) z^2, g = b + s z - conj(b) z^2:
// the quartic |a s - b r|^2 - (a conj(b) - conj(a) b)^2 in chart variables.
MultiPoly quartic_reference_form(const RealChart& chart);
// Re(a s - b r), Im(a s - b r), 2 Im(a conj(b)); their squares sum to the
// reference quartic.
std::vector<MultiPoly> quartic_reference_squares(const RealChart& chart);

// Chart parameters whose sections f and g both vanish at z0.
std::vector<RationalVector> exact_zero_family(const RealChart& chart, const ComplexScalar& z0);
std::vector<RationalVector> exact_zero_family(const BundleSpec& spec, const ComplexScalar& z0);

struct ZeroSample {
  ComplexScalar z0;
  RationalVector point;
};

// `per_z0` random integer combinations of each zero family, over `z0_count`
// random Gaussian rationals (numerators in [-9, 9], denominators in [1, 9]).
// Points are primitive integer vectors and nonzero.
std::vector<ZeroSample> sample_zeros(const RealChart& chart, std::size_t z0_count, std::size_t per_z0,
                                     Sampler& sampler);

ComplexScalar random_gaussian_rational(Sampler& sampler);

}  // namespace rrl
