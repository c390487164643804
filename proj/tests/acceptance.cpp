// Acceptance run: one PASS/FAIL line per criterion, with wall time.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "rrl/certify.hpp"
#include "rrl/checks.hpp"
#include "rrl/facial.hpp"
#include "rrl/gram.hpp"
#include "rrl/invariants.hpp"
#include "rrl/resultant.hpp"
#include "rrl/rho.hpp"

using namespace rrl;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

MultiPoly var(std::size_t n, std::size_t i) { return MultiPoly::variable(n, i); }

bool equal_up_to_positive_scale(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return a == b;
  const auto& [mono, coeff] = *b.terms().begin();
  const Rational scale = a.coefficient(mono) / coeff;
  return scale > 0 && a == scale * b;
}

ComplexScalar constant_of(const ComplexPoly& p) {
  const std::size_t n = p.var_count();
  return {p.re.coefficient(Monomial(n)), p.im.coefficient(Monomial(n))};
}

ComplexScalar random_scalar(Sampler& s) { return {oracle::small_rational(s), oracle::small_rational(s)}; }

ComplexUniPoly random_uni(Sampler& s, std::size_t degree) {
  std::vector<ComplexScalar> c;
  for (std::size_t i = 0; i <= degree; ++i) c.push_back(random_scalar(s));
  if (c.back() == ComplexScalar{}) c.back() = {1, 0};
  return ComplexUniPoly::from_scalars(c);
}

Outcome exact_line_bundle() {
  MultiPoly rho = build_rho(BundleSpec::make(1, 1)).poly;
  MultiPoly want(4);
  for (std::size_t i = 0; i < 4; ++i) want = want + var(4, i) * var(4, i);
  return {equal_up_to_positive_scale(rho, want), "rho = x0^2 + x1^2 + x2^2 + x3^2"};
}

Outcome exact_quartic() {
  RealChart chart = build_chart(BundleSpec::make(2, 2));
  MultiPoly rho = build_rho(chart).poly;
  const ComplexUniPoly fs = chart.f_symbolic();
  const ComplexUniPoly gs = chart.g_symbolic();
  const ComplexPoly& a = fs.coeff(0);
  const ComplexPoly& r = fs.coeff(1);
  const ComplexPoly& b = gs.coeff(0);
  const ComplexPoly& s = gs.coeff(1);
  ComplexPoly d = a * s - b * r;
  ComplexPoly t = a * b.conj() - a.conj() * b;
  MultiPoly quartic = d.norm_sq() - (t * t).re;
  const bool form = (t * t).is_real() && equal_up_to_positive_scale(rho, quartic);

  GramProblem prob = gram_system(rho);
  std::vector<MultiPoly> squares{d.re, d.im, Rational(2) * (a * b.conj()).im};
  MultiPoly sum(6);
  for (const auto& q : squares) sum = sum + q * q;
  const auto& [mono, coeff] = *sum.terms().begin();
  const Rational scale = rho.coefficient(mono) / coeff;
  const std::size_t n = prob.basis.size();
  Matrix<Rational> q(n, n, Rational(0));
  for (const auto& sq : squares) {
    std::vector<Rational> v;
    for (const auto& m : prob.basis.monomials) v.push_back(sq.coefficient(m));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) q(i, j) += scale * v[i] * v[j];
  }
  const bool gram = scale > 0 && satisfies_constraints(prob, q) && check_psd(q).psd;
  return {form && gram, std::string("quartic form ") + (form ? "matches" : "differs") + ", 3-square Gram " +
                            (gram ? "exact and PSD" : "rejected")};
}

Outcome cubic_metadata() {
  MultiPoly rho = build_rho(BundleSpec::make(3, 3)).poly;
  const bool ok = rho.is_homogeneous() && rho.degree() == 6u && rho.var_count() == 8 && rho.term_count() == 224;
  return {ok, "degree " + std::to_string(*rho.degree()) + ", " + std::to_string(rho.var_count()) + " variables, " +
                  std::to_string(rho.term_count()) + " terms"};
}

Outcome nonnegativity() {
  std::ostringstream out;
  bool ok = true;
  for (auto spec : {BundleSpec::make(1, 1), BundleSpec::make(2, 2), BundleSpec::make(3, 3), BundleSpec::make(4, 2)}) {
    Sampler s(42);
    NonnegativityReport rep = sample_nonnegativity(build_rho(spec).poly, 100000, s);
    ok = ok && rep.negatives == 0 && rep.min_value >= 0;
    out << spec.to_string() << " min " << rep.min_value.get_d() << "; ";
  }
  return {ok, out.str() + "10^5 samples each"};
}

Outcome identities() {
  RealChart chart = build_chart(BundleSpec::make(3, 3));
  BracketInvariants inv = bracket_invariants(chart);
  MultiPoly rho = build_rho(chart).poly;
  const bool closed = (rho_closed_form(inv) - rho).is_zero();
  const bool rs = (inv.r * inv.s - inv.u.norm_sq() - inv.v.norm_sq()).is_zero();
  // (r^2 - |v|^2)^2 + |r conj(u) + u conj(v)|^2, assembled here.
  ComplexPoly rc(inv.r, MultiPoly(8));
  MultiPoly left = inv.r * inv.r - inv.v.norm_sq();
  MultiPoly times_r = left * left + (rc * inv.u.conj() + inv.u * inv.v.conj()).norm_sq();
  const bool rform = (times_r - inv.r * rho).is_zero();
  return {closed && rs && rform, std::string("closed form ") + (closed ? "ok" : "FAILS") + ", rs identity " +
                                     (rs ? "ok" : "FAILS") + ", r*rho form " + (rform ? "ok" : "FAILS")};
}

Outcome zero_structure() {
  RealChart chart = build_chart(BundleSpec::make(3, 3));
  MultiPoly rho = build_rho(chart).poly;
  HessianProbe probe(rho);
  Sampler s(42);
  auto zeros = sample_zeros(chart, 25, 4, s);
  std::size_t vanish = 0, psd = 0, minors5 = 0, minor4 = 0;
  std::map<std::size_t, std::size_t> ranks;
  for (const auto& z : zeros) {
    ZeroDiagnostics d = probe.analyze(z.point);
    vanish += d.value == 0;
    psd += d.hessian_psd;
    minors5 += d.all_minors5_vanish;
    minor4 += d.some_minor4_nonzero;
    ++ranks[d.hessian_rank];
  }
  const std::size_t n = zeros.size();
  std::ostringstream out;
  out << n << " zeros: rho=0 at " << vanish << ", PSD at " << psd << ", 5x5 minors vanish at " << minors5
      << ", some 4x4 minor nonzero at " << minor4 << "; rank histogram";
  for (const auto& [r, c] : ranks) out << " " << r << ":" << c;
  const bool ok = n == 100 && vanish == n && psd == n && minors5 == n && minor4 == n && ranks[4] == n;
  return {ok, out.str()};
}

Outcome resultant_consistency() {
  Sampler s(42);
  const int eps = bezout_sylvester_sign();
  std::size_t bad = 0;
  for (int k = 0; k < 1000; ++k) {
    ComplexUniPoly f = random_uni(s, 3), g = random_uni(s, 3);
    ComplexScalar bz = constant_of(bezout3_resultant(f, g));
    ComplexScalar sy = constant_of(resultant(f, g));
    bad += bz != (eps == 1 ? sy : -sy);
  }
  std::size_t law_bad = 0;
  for (int k = 0; k < 200; ++k) {
    const std::size_t m = 1 + k % 3, n = 1 + (k / 3) % 3;
    ComplexUniPoly f = random_uni(s, m), g = random_uni(s, n), h = random_uni(s, 1 + k % 2);
    ComplexScalar fg = constant_of(resultant(f, g)), gf = constant_of(resultant(g, f));
    law_bad += fg != ((m * n) % 2 ? -gf : gf);
    law_bad += constant_of(resultant(f * h, g)) != fg * constant_of(resultant(h, g));
  }
  return {bad == 0 && law_bad == 0, "epsilon " + std::to_string(eps) + ", " + std::to_string(bad) +
                                        " Bezout mismatches in 1000 cubic pairs, " + std::to_string(law_bad) +
                                        " swap/multiplicativity failures in 200"};
}

Outcome chern_pipeline() {
  std::size_t bad = 0, cells = 0;
  for (long d = 2; d <= 12; ++d) {
    for (long g = 0; g <= 9; ++g) {
      for (long r = 1; r <= 3; ++r) {
        ++cells;
        CohomologyClass ch = chern_character_sym2({d, g, r});
        CohomologyClass c1 = first_chern_class(ch);
        bad += c1 != CohomologyClass{0, Rational(d), make_rational(-r, 2), 0, 0, 0};
        const Rational c2 = second_chern_number(ch, g);
        bad += c2 != make_rational(d * (d + 1 - 2 * r) - r * (r - 1) * (g - 1), 2);
        if (r == 2) bad += c2 != Rational(d * (d - 3) / 2 + 1 - g);
      }
    }
  }
  return {bad == 0, std::to_string(cells) + " grid cells, " + std::to_string(bad) + " mismatches"};
}

Outcome obstruction() {
  SosObstruction o = sos_obstruction(6, 0);
  const bool ok = o.deg_v2 == 10 && o.bound == 9 && o.obstructed && o.hypothesis;
  return {ok, "deg V2 " + std::to_string(o.deg_v2) + ", bound " + to_string(o.bound) +
                  (o.obstructed ? ", obstructed" : ", not obstructed") +
                  (o.hypothesis ? ", d(d-6) >= 4(g-1)" : ", hypothesis fails")};
}

Outcome sos_verdicts() {
  MultiPoly rho2 = build_rho(BundleSpec::make(2, 2)).poly;
  CertifyOptions opts;
  opts.seed = 42;
  Certificate c2 = certify(rho2, opts);
  VerificationReport v2 = verify_certificate(rho2, c2);
  const bool sos_ok = std::holds_alternative<SosWitness>(c2.kind) && v2.ok && v2.relative_residual &&
                      *v2.relative_residual <= 1e-6;

  RealChart chart = build_chart(BundleSpec::make(3, 3));
  MultiPoly rho3 = build_rho(chart).poly;
  Sampler s(42);
  std::vector<RationalVector> zeros;
  for (auto& z : sample_zeros(chart, 25, 4, s)) zeros.push_back(z.point);
  Certificate c3 = certify(rho3, opts, zeros);
  VerificationReport v3 = verify_certificate(rho3, c3, zeros);
  const bool non_ok = (std::holds_alternative<NonSosExact>(c3.kind) || std::holds_alternative<NonSosNumeric>(c3.kind)) &&
                      v3.ok;
  std::ostringstream out;
  out << "O(2)+O(2) " << c2.kind_name() << " via " << c2.branch << " (relative residual "
      << (v2.relative_residual ? *v2.relative_residual : -1.0) << "); O(3)+O(3) " << c3.kind_name() << " via "
      << c3.branch;
  if (c3.face_dim) out << " (face " << *c3.face_dim << ")";
  return {sos_ok && non_ok, out.str()};
}

Outcome property_suites() {
  Sampler s(42);
  std::size_t fail = 0, cases = 0;
  for (int k = 0; k < 200; ++k, ++cases) {
    MultiPoly p = oracle::random_poly(s, 3, 3, 5), q = oracle::random_poly(s, 3, 3, 5), r = oracle::random_poly(s, 3, 3, 5);
    fail += (p * q) * r != p * (q * r) || p * q != q * p || p * (q + r) != p * q + p * r || (p + q) + r != p + (q + r);
  }
  for (int k = 0; k < 200; ++k, ++cases) {
    MultiPoly p = oracle::random_poly(s, 4, 4, 6), q = oracle::random_poly(s, 4, 4, 6);
    std::vector<Rational> pt;
    for (int i = 0; i < 4; ++i) pt.push_back(oracle::small_rational(s));
    fail += evaluate(p * q, pt) != evaluate(p, pt) * evaluate(q, pt);
  }
  for (int k = 0; k < 200; ++k, ++cases) {
    const std::size_t n = 1 + k % 5;
    Matrix<Rational> m = oracle::random_matrix(s, n, n, k % 3 == 0 ? 0.4 : 0.0);
    fail += determinant(m) != oracle::laplace_det(m, Rational(0), Rational(1));
  }
  for (int k = 0; k < 200; ++k, ++cases) {
    Matrix<Rational> m = oracle::random_matrix(s, 1 + k % 6, 1 + (k / 6) % 7, 0.5);
    fail += exact_rank(m) + exact_kernel(m).size() != m.cols();
  }
  for (int k = 0; k < 200; ++k, ++cases) {
    std::vector<Rational> bvec{oracle::small_rational(s), oracle::small_rational(s), 1};
    MultiPoly bx = MultiPoly::linear(bvec);
    std::vector<Rational> avec{oracle::small_rational(s), oracle::small_rational(s), oracle::small_rational(s)};
    MultiPoly sq = MultiPoly::linear(avec) * bx;
    if (sq.is_zero()) sq = bx * bx;
    GramProblem prob = gram_system(sq * sq);
    std::vector<RationalVector> zeros;
    std::size_t last = prob.basis.size();
    for (int batch = 0; batch < 3; ++batch) {
      for (int t = 0; t < 2; ++t) {
        const Rational u = oracle::small_rational(s), v = oracle::small_rational(s);
        zeros.push_back({u, v, -(bvec[0] * u + bvec[1] * v)});
      }
      GramProblem red = facial_reduce(prob, zeros);
      fail += red.face->dim() > last;
      last = red.face->dim();
      for (const auto& w : red.face->basis) {
        for (const auto& z : zeros) {
          Rational v = 0;
          for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] != 0) v += Rational(w[i]) * evaluate(MultiPoly::term(prob.basis.monomials[i], 1), z);
          }
          fail += v != 0;
        }
      }
    }
  }
  return {fail == 0, std::to_string(cases) + " randomized cases over 5 suites, " + std::to_string(fail) + " failures"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"O(1)+O(1) reproduction", exact_line_bundle},
      {"O(2)+O(2) reproduction and Gram witness", exact_quartic},
      {"O(3)+O(3) metadata", cubic_metadata},
      {"nonnegativity sampling", nonnegativity},
      {"exact symbolic identities", identities},
      {"zero-set structure", zero_structure},
      {"resultant consistency", resultant_consistency},
      {"Chern pipeline", chern_pipeline},
      {"obstruction arithmetic", obstruction},
      {"SOS verdicts", sos_verdicts},
      {"property suites", property_suites},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    std::printf("criterion %2zu %s %8.2fs  %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", secs, criteria[i].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
