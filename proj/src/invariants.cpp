#include "rrl/invariants.hpp"

namespace rrl {

CohomologyClass operator+(const CohomologyClass& a, const CohomologyClass& b) {
  return {a.c0 + b.c0,   a.cx + b.cx,           a.cdelta + b.cdelta,
          a.cxx + b.cxx, a.cxdelta + b.cxdelta, a.cdeltadelta + b.cdeltadelta};
}

CohomologyClass operator-(const CohomologyClass& a, const CohomologyClass& b) { return a + Rational(-1) * b; }

CohomologyClass operator*(const Rational& s, const CohomologyClass& a) {
  return {s * a.c0, s * a.cx, s * a.cdelta, s * a.cxx, s * a.cxdelta, s * a.cdeltadelta};
}

CohomologyClass class_multiply(const CohomologyClass& a, const CohomologyClass& b) {
  CohomologyClass c;
  c.c0 = a.c0 * b.c0;
  c.cx = a.c0 * b.cx + a.cx * b.c0;
  c.cdelta = a.c0 * b.cdelta + a.cdelta * b.c0;
  c.cxx = a.c0 * b.cxx + a.cxx * b.c0 + a.cx * b.cx;
  c.cxdelta = a.c0 * b.cxdelta + a.cxdelta * b.c0 + a.cx * b.cdelta + a.cdelta * b.cx;
  c.cdeltadelta = a.c0 * b.cdeltadelta + a.cdeltadelta * b.c0 + a.cdelta * b.cdelta;
  return c;
}

Rational pair_with_fundamental(const CohomologyClass& a, long genus) {
  return a.cxx + 2 * a.cxdelta + 4 * (1 - genus) * a.cdeltadelta;
}

CohomologyClass chern_character_sym2(const CurveBundleParams& p) {
  using C = CohomologyClass;
  const C one = C::one(), x = C::x(), delta = C::delta();
  const C exp_minus_x = one - x + make_rational(1, 2) * class_multiply(x, x);
  const C first = Rational(p.d) * (one - exp_minus_x);
  const C second = Rational(p.r * (p.g - 1)) * one;
  const C inner = Rational(p.g + 1) * (one + x) - make_rational(1, 2) * delta;
  const C third = Rational(p.r) * class_multiply(inner, exp_minus_x);
  return first - second + third;
}

CohomologyClass first_chern_class(const CohomologyClass& ch) {
  CohomologyClass c;
  c.cx = ch.cx;
  c.cdelta = ch.cdelta;
  return c;
}

Rational second_chern_number(const CohomologyClass& ch, long genus) {
  const CohomologyClass c1 = first_chern_class(ch);
  CohomologyClass ch2;
  ch2.cxx = ch.cxx;
  ch2.cxdelta = ch.cxdelta;
  ch2.cdeltadelta = ch.cdeltadelta;
  const CohomologyClass c2 = make_rational(1, 2) * (class_multiply(c1, c1) - Rational(2) * ch2);
  return pair_with_fundamental(c2, genus);
}

Rational second_chern_number_closed_form(const CurveBundleParams& p) {
  return make_rational(p.d * (p.d + 1 - 2 * p.r), 2) - make_rational(p.r * (p.r - 1) * (p.g - 1), 2);
}

long degree_v2(long d, long g) { return d * (d - 3) / 2 + 1 - g; }

SosObstruction sos_obstruction(long d, long g) {
  SosObstruction o;
  o.bound = make_rational(d * d, 4);
  o.deg_v2 = degree_v2(d, g);
  o.obstructed = Rational(o.deg_v2) >= o.bound;
  o.hypothesis = d * (d - 6) >= 4 * (g - 1);
  return o;
}

}  // namespace rrl
