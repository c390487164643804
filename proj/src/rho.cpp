#include "rrl/rho.hpp"

#include "rrl/errors.hpp"
#include "rrl/resultant.hpp"

namespace rrl {

namespace {

// Calls `visit` on integer points of max-norm exactly `radius`, lexicographically.
template <class Visit>
bool visit_shell(std::size_t dim, long radius, Visit&& visit) {
  std::vector<long> p(dim, -radius);
  while (true) {
    bool on_shell = false;
    for (long x : p) on_shell = on_shell || x == radius || x == -radius;
    if (on_shell) {
      RationalVector q;
      for (long x : p) q.emplace_back(x);
      if (visit(q)) return true;
    }
    std::size_t i = dim;
    while (i > 0 && p[i - 1] == radius) p[--i] = -radius;
    if (i == 0) return false;
    ++p[i - 1];
  }
}

}  // namespace

RationalVector default_probe(const RealChart& chart) {
  RationalVector p(chart.real_dim(), Rational(0));
  if (chart.spec().flavor == Flavor::OddDiag) {
    p[0] = 1;                     // Re a_0
    p[2 * chart.spec().m] = 1;    // Re a_m
  }
  return p;
}

RhoPolynomial build_rho(const BundleSpec& spec) { return build_rho(build_chart(spec)); }

RhoPolynomial build_rho(const RealChart& chart) {
  const BundleSpec& spec = chart.spec();
  if (spec.total_degree() < 2) throw UsageError("rho needs total degree at least 2");
  const ComplexPoly res = resultant(chart.f_symbolic(), chart.g_symbolic());
  if (!res.im.is_zero()) {
    throw ConsistencyError("resultant restricted to the real chart of " + spec.to_string() +
                           " has a nonzero imaginary part");
  }
  const MultiPoly& raw = res.re;
  if (raw.is_zero()) throw ConsistencyError("resultant vanishes identically on the real chart");

  RhoPolynomial out{spec, raw, 1, raw.content(), {}};
  out.poly = raw * (Rational(1) / out.removed_content);

  RationalVector probe = default_probe(chart);
  Rational value = evaluate(out.poly, probe);
  for (long radius = 1; value == 0; ++radius) {
    visit_shell(chart.real_dim(), radius, [&](const RationalVector& q) {
      value = evaluate(out.poly, q);
      if (value != 0) probe = q;
      return value != 0;
    });
  }
  out.probe = probe;
  if (value < 0) {
    out.normalization_sign = -1;
    out.poly = -out.poly;
  }
  if (!out.poly.is_homogeneous() || out.poly.degree() != spec.total_degree()) {
    throw ConsistencyError("rho is not homogeneous of degree " + std::to_string(spec.total_degree()));
  }
  return out;
}

BracketInvariants bracket_invariants(const RealChart& chart) {
  const BundleSpec& spec = chart.spec();
  if (spec.flavor != Flavor::OddDiag || spec.m != 3) {
    throw UsageError("bracket invariants are defined for O(3)+O(3) only");
  }
  const auto f = chart.f_symbolic(), g = chart.g_symbolic();
  const ComplexPoly r = bracket(f, g, 3, 0).value;
  const ComplexPoly s = -bracket(f, g, 2, 1).value;
  if (!r.is_real() || !s.is_real()) throw ConsistencyError("brackets [3,0] and [2,1] must be real on the chart");
  return {r.re, s.re, bracket(f, g, 3, 1).value, bracket(f, g, 3, 2).value};
}

MultiPoly rho_closed_form(const BracketInvariants& inv) {
  const MultiPoly& r = inv.r;
  const MultiPoly r_minus_s = inv.r - inv.s;
  const ComplexPoly cross = inv.u * inv.u * inv.v.conj();  // u^2 conj(v)
  return r * r * r_minus_s + Rational(2) * r * inv.u.norm_sq() - r_minus_s * inv.v.norm_sq() +
         Rational(2) * cross.re;
}

ComplexPoly zero_locus_expression(const BracketInvariants& inv) {
  const ComplexPoly r(inv.r, MultiPoly(inv.r.var_count()));
  return r * inv.u.conj() + inv.u * inv.v.conj();
}

MultiPoly rho_times_r_form(const BracketInvariants& inv) {
  const MultiPoly a = inv.r * inv.r - inv.v.norm_sq();
  return a * a + zero_locus_expression(inv).norm_sq();
}

Rational rho_rational_form(const BracketInvariants& inv, std::span<const Rational> point) {
  const Rational r = evaluate(inv.r, point);
  if (r == 0) throw DomainError("rational form of rho requires r != 0");
  const ComplexScalar u = evaluate(inv.u, point), v = evaluate(inv.v, point);
  const Rational a = r * r - v.norm_sq();
  const ComplexScalar w = ComplexScalar{r, 0} * u.conj() + u * v.conj();
  return (a * a + w.norm_sq()) / r;
}

namespace {

struct QuarticCoefficients {
  ComplexPoly a, r, b, s;
};

QuarticCoefficients quartic_coefficients(const RealChart& chart) {
  const BundleSpec& spec = chart.spec();
  if (spec.flavor != Flavor::Even || spec.m != 2 || spec.n != 2) {
    throw UsageError("quartic reference form is defined for O(2)+O(2) only");
  }
  const auto f = chart.f_symbolic(), g = chart.g_symbolic();
  QuarticCoefficients q{f.coeff(0), f.coeff(1), g.coeff(0), g.coeff(1)};
  if (!q.r.is_real() || !q.s.is_real() || !(f.coeff(2) == -q.a.conj()) || !(g.coeff(2) == -q.b.conj())) {
    throw ConsistencyError("O(2)+O(2) chart does not have the shape a + r z - conj(a) z^2");
  }
  return q;
}

}  // namespace

MultiPoly quartic_reference_form(const RealChart& chart) {
  const auto q = quartic_coefficients(chart);
  const ComplexPoly w = q.a * q.s - q.b * q.r;
  const ComplexPoly t = q.a * q.b.conj() - q.a.conj() * q.b;
  const ComplexPoly t2 = t * t;
  if (!t2.is_real()) throw ConsistencyError("square of an imaginary expression must be real");
  return w.norm_sq() - t2.re;
}

std::vector<MultiPoly> quartic_reference_squares(const RealChart& chart) {
  const auto q = quartic_coefficients(chart);
  const ComplexPoly w = q.a * q.s - q.b * q.r;
  const ComplexPoly t = q.a * q.b.conj();
  return {w.re, w.im, Rational(2) * t.im};
}

std::vector<RationalVector> exact_zero_family(const RealChart& chart, const ComplexScalar& z0) {
  const std::size_t dim = chart.real_dim();
  Matrix<Rational> a(4, dim, Rational(0));
  std::size_t row = 0;
  for (const auto* forms : {&chart.f_forms(), &chart.g_forms()}) {
    ComplexScalar zp{1, 0};
    for (const auto& c : *forms) {
      // (c.re + i c.im) * (zp.re + i zp.im)
      for (std::size_t j = 0; j < dim; ++j) {
        a(row, j) += c.re[j] * zp.re - c.im[j] * zp.im;
        a(row + 1, j) += c.re[j] * zp.im + c.im[j] * zp.re;
      }
      zp = zp * z0;
    }
    row += 2;
  }
  return exact_kernel(a);
}

std::vector<RationalVector> exact_zero_family(const BundleSpec& spec, const ComplexScalar& z0) {
  return exact_zero_family(build_chart(spec), z0);
}

ComplexScalar random_gaussian_rational(Sampler& sampler) {
  auto part = [&] {
    Rational q(static_cast<long>(sampler.uniform_int(-9, 9)), static_cast<unsigned long>(sampler.uniform_int(1, 9)));
    q.canonicalize();
    return q;
  };
  ComplexScalar z;
  z.re = part();
  z.im = part();
  return z;
}

std::vector<ZeroSample> sample_zeros(const RealChart& chart, std::size_t z0_count, std::size_t per_z0,
                                     Sampler& sampler) {
  std::vector<ZeroSample> out;
  for (std::size_t k = 0; k < z0_count; ++k) {
    const ComplexScalar z0 = random_gaussian_rational(sampler);
    std::vector<IntegerVector> basis;
    for (const auto& v : exact_zero_family(chart, z0)) basis.push_back(primitive_integer(v));
    if (basis.empty()) continue;
    for (std::size_t t = 0; t < per_z0; ++t) {
      IntegerVector p(chart.real_dim(), Integer(0));
      bool nonzero = false;
      while (!nonzero) {
        std::fill(p.begin(), p.end(), Integer(0));
        for (const auto& b : basis) {
          const long c = static_cast<long>(sampler.uniform_int(-9, 9));
          if (c == 0) continue;
          for (std::size_t i = 0; i < p.size(); ++i) p[i] += c * b[i];
        }
        for (const auto& x : p) nonzero = nonzero || x != 0;
      }
      out.push_back({z0, to_rational(primitive_integer(to_rational(p)))});
    }
  }
  return out;
}

}  // namespace rrl
