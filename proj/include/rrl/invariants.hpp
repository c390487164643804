#pragma once

#include "rrl/rational.hpp"

namespace rrl {

// Class in H^*(C_2, Q) spanned by 1, x, delta, truncated above degree 2.
struct CohomologyClass {
  Rational c0 = 0;
  Rational cx = 0;
  Rational cdelta = 0;
  Rational cxx = 0;
  Rational cxdelta = 0;
  Rational cdeltadelta = 0;

  static CohomologyClass one() { return {1, 0, 0, 0, 0, 0}; }
  static CohomologyClass x() { return {0, 1, 0, 0, 0, 0}; }
  static CohomologyClass delta() { return {0, 0, 1, 0, 0, 0}; }

  friend CohomologyClass operator+(const CohomologyClass& a, const CohomologyClass& b);
  friend CohomologyClass operator-(const CohomologyClass& a, const CohomologyClass& b);
  friend CohomologyClass operator*(const Rational& s, const CohomologyClass& a);
  friend bool operator==(const CohomologyClass&, const CohomologyClass&) = default;
};

// Graded product, discarding everything above degree 2.
CohomologyClass class_multiply(const CohomologyClass& a, const CohomologyClass& b);

// Degree-2 part paired with [C_2]: x^2 = 1, x delta = 2, delta^2 = 4(1 - g).
Rational pair_with_fundamental(const CohomologyClass& a, long genus);

struct CurveBundleParams {
  long d = 0;  // degree
  long g = 0;  // genus
  long r = 1;  // rank
};

// ch(E^[2]) = d(1 - e^{-x}) - r(g - 1) + r((g + 1)(1 + x) - delta/2) e^{-x},
// with e^{-x} truncated to 1 - x + x^2/2.
CohomologyClass chern_character_sym2(const CurveBundleParams& p);

// c_1 = ch_1 (degree-1 part of the character).
CohomologyClass first_chern_class(const CohomologyClass& ch);

// c_2[C_2] = pairing of (c_1^2 - 2 ch_2) / 2.
Rational second_chern_number(const CohomologyClass& ch, long genus);

// d(d + 1 - 2r)/2 - r(r - 1)(g - 1)/2
Rational second_chern_number_closed_form(const CurveBundleParams& p);

// d(d - 3)/2 + 1 - g
long degree_v2(long d, long g);

struct SosObstruction {
  Rational bound;            // d^2 / 4
  long deg_v2 = 0;
  bool obstructed = false;   // deg_v2 >= d^2 / 4
  bool hypothesis = false;   // d(d - 6) >= 4(g - 1)
};

SosObstruction sos_obstruction(long d, long g);

}  // namespace rrl
