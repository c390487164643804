#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "oracles.hpp"
#include "rrl/certify.hpp"
#include "rrl/errors.hpp"
#include "rrl/facial.hpp"
#include "rrl/gram.hpp"
#include "rrl/rho.hpp"
#include "rrl/sdp.hpp"

using namespace rrl;

namespace {

MultiPoly var(std::size_t n, std::size_t i) { return MultiPoly::variable(n, i); }

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

MultiPoly face_poly(const GramProblem& prob, const IntegerVector& w) {
  MultiPoly p(prob.basis.n);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] != 0) p = p + MultiPoly::term(prob.basis.monomials[i], Rational(w[i]));
  }
  return p;
}

RationalVector coefficients_over(const MonomialBasis& basis, const MultiPoly& p) {
  RationalVector v;
  for (const auto& m : basis.monomials) v.push_back(p.coefficient(m));
  return v;
}

// Rank of the face basis with and without v appended.
bool in_span(const std::vector<IntegerVector>& face, const RationalVector& v) {
  const std::size_t n = v.size();
  Matrix<Rational> a(face.size() + 1, n, Rational(0));
  for (std::size_t i = 0; i < face.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Rational(face[i][j]);
  Matrix<Rational> b = a;
  for (std::size_t j = 0; j < n; ++j) b(face.size(), j) = v[j];
  return oracle::naive_rank(a) == oracle::naive_rank(b);
}

std::uint64_t mod_p(const Rational& q, std::uint64_t p) {
  auto red = [p](const Integer& z) {
    Integer r = z % Integer(std::to_string(p));
    if (r < 0) r += Integer(std::to_string(p));
    return std::stoull(r.get_str());
  };
  const std::uint64_t num = red(q.get_num());
  const std::uint64_t den = red(q.get_den());
  // den^(p-2)
  auto mul = [p](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
  };
  std::uint64_t inv = 1, base = den, e = p - 2;
  while (e) {
    if (e & 1) inv = mul(inv, base);
    base = mul(base, base);
    e >>= 1;
  }
  return mul(num, inv);
}

// Independent replay of a modular span witness: the square matrix of
// [products | target] on the witness rows has a nonzero determinant mod p.
bool modular_witness_holds(const GramProblem& prob, const SpanWitness& w) {
  const auto& face = prob.face->basis;
  std::vector<MultiPoly> polys;
  for (const auto& v : face) polys.push_back(face_poly(prob, v));
  std::vector<MultiPoly> cols;
  for (std::size_t a = 0; a < polys.size(); ++a)
    for (std::size_t b = a; b < polys.size(); ++b) cols.push_back(polys[a] * polys[b]);
  cols.push_back(prob.target);
  if (cols.size() != w.rows.size()) return false;
  const std::uint64_t p = w.prime;
  const std::size_t n = cols.size();
  std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m[r][c] = mod_p(cols[c].coefficient(prob.constraints[w.rows[r]].gamma), p);
  auto mul = [p](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
  };
  auto inverse = [&](std::uint64_t a) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  };
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return false;
    std::swap(m[piv], m[c]);
    const std::uint64_t inv = inverse(m[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      const std::uint64_t f = mul(m[r][c], inv);
      for (std::size_t j = c; j < n; ++j) m[r][j] = (m[r][j] + p - mul(f, m[c][j])) % p;
    }
  }
  return true;
}

// Coefficients of m^T Q m, accumulated monomial by monomial.
double max_gram_mismatch(const GramProblem& prob, const Eigen::MatrixXd& q) {
  std::map<Monomial, double> acc;
  const auto& mons = prob.basis.monomials;
  for (std::size_t i = 0; i < mons.size(); ++i)
    for (std::size_t j = 0; j < mons.size(); ++j) acc[mons[i] * mons[j]] += q(i, j);
  double worst = 0;
  for (const auto& [m, c] : acc) worst = std::max(worst, std::abs(c - prob.target.coefficient(m).get_d()));
  return worst;
}

std::vector<RationalVector> rho3_zeros(std::uint64_t seed, std::size_t z0_count, std::size_t per) {
  Sampler s(seed);
  std::vector<RationalVector> out;
  for (auto& z : sample_zeros(build_chart(BundleSpec::make(3, 3)), z0_count, per, s)) out.push_back(z.point);
  return out;
}

}  // namespace

TEST(MonomialBasisTest, Examples) {
  MonomialBasis b = monomial_basis(2, 1);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b.monomials[0], (Monomial{1, 0}));
  EXPECT_EQ(b.monomials[1], (Monomial{0, 1}));
  EXPECT_EQ(monomial_basis(8, 3).size(), 120u);
  EXPECT_EQ(monomial_basis(6, 2).size(), 21u);
}

TEST(MonomialBasisTest, CountsAndOrder) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (unsigned d = 0; d <= 4; ++d) {
      MonomialBasis b = monomial_basis(n, d);
      EXPECT_EQ(b.size(), binomial(n + d - 1, d));
      for (std::size_t i = 1; i < b.size(); ++i) EXPECT_GT(b.monomials[i - 1], b.monomials[i]);
    }
  }
}

TEST(GramSystem, SingleSquare) {
  GramProblem prob = gram_system(var(2, 0) * var(2, 0));
  Matrix<Rational> q(2, 2, Rational(0));
  q(0, 0) = 1;
  EXPECT_TRUE(satisfies_constraints(prob, q));
  EXPECT_TRUE(check_psd(q).psd);
}

TEST(GramSystem, ConstraintsPartitionUpperTriangle) {
  GramProblem prob = gram_system(build_rho(BundleSpec::make(2, 2)).poly);
  const std::size_t n = prob.basis.size();
  std::vector<int> seen(n * n, 0);
  for (const auto& c : prob.constraints) {
    for (const auto& [i, j] : c.pairs) {
      EXPECT_LE(i, j);
      EXPECT_EQ(prob.basis.monomials[i] * prob.basis.monomials[j], c.gamma);
      ++seen[i * n + j];
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) EXPECT_EQ(seen[i * n + j], 1);
}

TEST(GramSystem, ProductOfVariablesHasNoPsdGram) {
  GramProblem prob = gram_system(var(2, 0) * var(2, 1));
  // The unique Gram matrix has zero diagonal and 1/2 off it.
  Matrix<Rational> q(2, 2, Rational(0));
  q(0, 1) = q(1, 0) = make_rational(1, 2);
  EXPECT_TRUE(satisfies_constraints(prob, q));
  EXPECT_FALSE(check_psd(q).psd);
}

TEST(GramSystem, QuarticThreeSquareWitness) {
  RealChart chart = build_chart(BundleSpec::make(2, 2));
  MultiPoly rho = build_rho(chart).poly;
  GramProblem prob = gram_system(rho);
  const ComplexUniPoly fs = chart.f_symbolic();
  const ComplexUniPoly gs = chart.g_symbolic();
  const ComplexPoly& a = fs.coeff(0);
  const ComplexPoly& r = fs.coeff(1);
  const ComplexPoly& b = gs.coeff(0);
  const ComplexPoly& s = gs.coeff(1);
  ComplexPoly d = a * s - b * r;
  ComplexPoly ab = a * b.conj();
  std::vector<MultiPoly> squares{d.re, d.im, Rational(2) * ab.im};
  MultiPoly sum(6);
  for (const auto& q : squares) sum = sum + q * q;
  const auto& [mono, coeff] = *sum.terms().begin();
  const Rational scale = rho.coefficient(mono) / coeff;
  ASSERT_GT(scale, 0);
  ASSERT_EQ(rho, scale * sum);
  Matrix<Rational> q(prob.basis.size(), prob.basis.size(), Rational(0));
  for (const auto& sq : squares) {
    RationalVector v = coefficients_over(prob.basis, sq);
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) q(i, j) += scale * v[i] * v[j];
  }
  EXPECT_TRUE(satisfies_constraints(prob, q));
  PsdReport psd = check_psd(q);
  EXPECT_TRUE(psd.psd);
  EXPECT_EQ(psd.rank, 3u);
}

TEST(GramSystem, RejectsBadInput) {
  EXPECT_THROW(gram_system(var(2, 0) * var(2, 0) + var(2, 1)), UsageError);
  EXPECT_THROW(gram_system(var(2, 0) * var(2, 0) * var(2, 1)), UsageError);
  EXPECT_THROW(gram_system(MultiPoly(2)), UsageError);
}

TEST(FacialReduce, NoZerosKeepsFullSpace) {
  GramProblem prob = facial_reduce(gram_system(build_rho(BundleSpec::make(2, 2)).poly), {});
  ASSERT_TRUE(prob.face.has_value());
  EXPECT_EQ(prob.face->dim(), prob.basis.size());
}

TEST(FacialReduce, QuadricSquareStaysInFace) {
  MultiPoly q = var(4, 0) * var(4, 3) - var(4, 1) * var(4, 2);
  GramProblem prob = gram_system(q * q);
  Sampler s(60);
  std::vector<RationalVector> zeros;
  while (zeros.size() < 30) {
    Rational a = oracle::small_rational(s), b = oracle::small_rational(s), c = oracle::small_rational(s);
    if (a == 0) continue;
    zeros.push_back({a, b, c, b * c / a});
  }
  GramProblem reduced = facial_reduce(prob, zeros);
  EXPECT_LT(reduced.face->dim(), prob.basis.size());
  EXPECT_TRUE(in_span(reduced.face->basis, coefficients_over(prob.basis, q)));
  // Directions outside: x0^2 does not vanish on the quadric.
  EXPECT_FALSE(in_span(reduced.face->basis, coefficients_over(prob.basis, var(4, 0) * var(4, 0))));
}

TEST(FacialReduce, RejectsNonZeroPoint) {
  GramProblem prob = gram_system(var(2, 0) * var(2, 0));
  EXPECT_THROW(facial_reduce(prob, {{0, 1}, {1, 1}}), UsageError);
  EXPECT_THROW(facial_reduce(prob, {{0, 1, 0}}), UsageError);
}

TEST(FacialReduce, SoundAndMonotoneOnRandomProducts) {
  // p = sum_i (a_i . x)^2 (b . x)^2 vanishes on the plane b . x = 0.
  Sampler s(61);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 3;
    std::vector<Rational> bvec{oracle::small_rational(s), oracle::small_rational(s), 1};
    MultiPoly bx = MultiPoly::linear(bvec);
    MultiPoly p(n);
    std::vector<MultiPoly> true_squares;
    for (int i = 0; i < 2; ++i) {
      std::vector<Rational> avec{oracle::small_rational(s), oracle::small_rational(s), oracle::small_rational(s)};
      MultiPoly sq = MultiPoly::linear(avec) * bx;
      true_squares.push_back(sq);
      p = p + sq * sq;
    }
    if (p.is_zero()) continue;
    GramProblem prob = gram_system(p);
    std::vector<RationalVector> zeros;
    std::size_t last_dim = prob.basis.size();
    GramProblem current = prob;
    for (int batch = 0; batch < 3; ++batch) {
      std::vector<RationalVector> fresh;
      for (int t = 0; t < 2; ++t) {
        const Rational u = oracle::small_rational(s), v = oracle::small_rational(s);
        fresh.push_back({u, v, -(bvec[0] * u + bvec[1] * v)});
      }
      zeros.insert(zeros.end(), fresh.begin(), fresh.end());
      current = facial_reduce(current, fresh);
      GramProblem oneshot = facial_reduce(prob, zeros);
      EXPECT_EQ(current.face->dim(), oneshot.face->dim());
      EXPECT_LE(current.face->dim(), last_dim);
      last_dim = current.face->dim();
      // Soundness: every face polynomial vanishes at every zero.
      for (const auto& w : current.face->basis) {
        MultiPoly fp = face_poly(prob, w);
        for (const auto& z : zeros) EXPECT_EQ(evaluate(fp, z), 0);
      }
      for (const auto& sq : true_squares) EXPECT_TRUE(in_span(current.face->basis, coefficients_over(prob.basis, sq)));
    }
    EXPECT_TRUE(face_annihilates(current, zeros));
  }
}

TEST(FacialReduce, CubicRhoFaceStabilizes) {
  for (std::uint64_t seed : {42u, 7u, 2026u}) {
    GramProblem prob = gram_system(build_rho(BundleSpec::make(3, 3)).poly);
    Sampler s(seed);
    RealChart chart = build_chart(BundleSpec::make(3, 3));
    ZeroBatchSource next = [&](std::size_t count) {
      std::vector<RationalVector> out;
      for (auto& z : sample_zeros(chart, count, 1, s)) out.push_back(z.point);
      return out;
    };
    FaceTrace trace = reduce_until_stable(prob, next);
    EXPECT_TRUE(trace.stabilized) << "seed " << seed;
    ASSERT_GE(trace.steps.size(), 3u);
    for (std::size_t i = 1; i < trace.steps.size(); ++i) EXPECT_LE(trace.steps[i].face_dim, trace.steps[i - 1].face_dim);
    const std::size_t n = trace.steps.size();
    EXPECT_EQ(trace.steps[n - 1].face_dim, trace.steps[n - 2].face_dim);
    EXPECT_EQ(trace.steps[n - 1].face_dim, trace.steps[n - 3].face_dim);
    EXPECT_EQ(trace.problem.face->dim(), 0u) << "seed " << seed;
  }
}

TEST(SpanCheck, SquareInsideItsOwnFace) {
  GramProblem prob = gram_system(var(2, 0) * var(2, 0));
  prob.face = Face{{{Integer(1), Integer(0)}}, 0};
  SpanCheck c = exact_span_check(prob);
  EXPECT_EQ(c.verdict, SpanVerdict::Inconclusive);
  EXPECT_TRUE(c.exact_decision);
}

TEST(SpanCheck, SquareOutsideOtherFace) {
  GramProblem prob = gram_system(var(2, 0) * var(2, 0));
  prob.face = Face{{{Integer(0), Integer(1)}}, 0};
  SpanCheck c = exact_span_check(prob);
  ASSERT_EQ(c.verdict, SpanVerdict::NotInSpan);
  ASSERT_TRUE(c.witness && c.witness->functional);
  EXPECT_TRUE(verify_span_witness(prob, *c.witness));
  // Functional re-checked against products built here.
  const auto& ell = *c.witness->functional;
  auto apply = [&](const MultiPoly& p) {
    Rational v = 0;
    for (const auto& [idx, weight] : ell) v += weight * p.coefficient(prob.constraints[idx].gamma);
    return v;
  };
  EXPECT_EQ(apply(var(2, 1) * var(2, 1)), 0);
  EXPECT_NE(apply(prob.target), 0);
}

TEST(SpanCheck, FunctionalsAnnihilateRandomFaces) {
  Sampler s(62);
  int not_in_span = 0;
  for (int k = 0; k < 200; ++k) {
    // Random homogeneous quartic plus a random 2-dimensional face over degree-2 monomials.
    MultiPoly::TermMap t;
    for (const auto& m : monomials_of_degree(3, 4)) {
      if (s.uniform_int(0, 2) == 0) t[m] = oracle::small_rational(s);
    }
    t[Monomial{4, 0, 0}] = 1;
    MultiPoly p(3, t);
    GramProblem prob = gram_system(p);
    std::vector<IntegerVector> face;
    for (int f = 0; f < 2; ++f) {
      IntegerVector v;
      for (std::size_t i = 0; i < prob.basis.size(); ++i) v.push_back(s.uniform_int(-2, 2));
      face.push_back(v);
    }
    prob.face = Face{face, 0};
    SpanCheck c = exact_span_check(prob);
    if (c.verdict != SpanVerdict::NotInSpan) continue;
    ++not_in_span;
    ASSERT_TRUE(c.witness && c.witness->functional);
    const auto& ell = *c.witness->functional;
    auto apply = [&](const MultiPoly& q) {
      Rational v = 0;
      for (const auto& [idx, weight] : ell) v += weight * q.coefficient(prob.constraints[idx].gamma);
      return v;
    };
    for (std::size_t a = 0; a < face.size(); ++a)
      for (std::size_t b = a; b < face.size(); ++b) EXPECT_EQ(apply(face_poly(prob, face[a]) * face_poly(prob, face[b])), 0);
    EXPECT_NE(apply(p), 0);
  }
  EXPECT_GT(not_in_span, 150);
}

TEST(Sdp, SumOfFourthPowersIsFeasible) {
  GramProblem prob = gram_system(var(2, 0).pow(4) + var(2, 1).pow(4));
  SdpResult r = sdp_feasible(prob);
  ASSERT_EQ(r.status, SdpStatus::Feasible) << r.note;
  EXPECT_LE(max_gram_mismatch(prob, r.gram), 1e-8);
  EXPECT_GE(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(r.gram).eigenvalues().minCoeff(), -1e-8);
  // Off-diagonal entries forced to zero by the x0^3 x1 and x0 x1^3 rows.
  EXPECT_LE(std::abs(r.gram(0, 1)), 1e-8);
  EXPECT_LE(std::abs(r.gram(1, 2)), 1e-8);
}

TEST(Sdp, SignChangingQuarticIsNeverFeasible) {
  GramProblem prob = gram_system(var(2, 0) * var(2, 0) * var(2, 1) * var(2, 1) - var(2, 0).pow(4));
  SdpResult r = sdp_feasible(prob);
  EXPECT_NE(r.status, SdpStatus::Feasible);
}

TEST(Sdp, QuarticRhoIsFeasible) {
  GramProblem prob = gram_system(build_rho(BundleSpec::make(2, 2)).poly);
  SdpResult r = sdp_feasible(prob);
  ASSERT_EQ(r.status, SdpStatus::Feasible) << r.note;
  EXPECT_LE(max_gram_mismatch(prob, r.gram), 1e-8);
  EXPECT_GE(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(r.gram).eigenvalues().minCoeff(), -1e-8);
}

TEST(Sdp, OversizeIsUsageError) {
  MultiPoly p(10);
  for (std::size_t i = 0; i < 10; ++i) p = p + var(10, i).pow(6);
  EXPECT_THROW(sdp_feasible(gram_system(p)), UsageError);
}

TEST(ExtractSquares, Examples) {
  Eigen::MatrixXd rank_one(2, 2);
  rank_one << 1, 2, 2, 4;
  auto one = extract_squares(rank_one, 1e-9);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_NEAR(one[0].weight * one[0].coeffs[0] * one[0].coeffs[0], 1.0, 1e-12);
  EXPECT_NEAR(one[0].weight * one[0].coeffs[0] * one[0].coeffs[1], 2.0, 1e-12);
  auto two = extract_squares(Eigen::MatrixXd::Identity(2, 2), 1e-9);
  EXPECT_EQ(two.size(), 2u);
  Eigen::MatrixXd indef(2, 2);
  indef << 0, 1, 1, 0;
  EXPECT_THROW(extract_squares(indef, 1e-9), UsageError);
}

TEST(Certify, LineBundleExactFourSquares) {
  MultiPoly rho = build_rho(BundleSpec::make(1, 1)).poly;
  Certificate c = certify(rho, {});
  ASSERT_TRUE(std::holds_alternative<SosWitness>(c.kind)) << c.kind_name();
  const auto& w = std::get<SosWitness>(c.kind);
  EXPECT_TRUE(w.exact);
  EXPECT_EQ(w.squares.size(), 4u);
  EXPECT_EQ(w.residual, 0);
  MultiPoly sum(4);
  for (const auto& sq : w.squares) sum = sum + sq.weight * sq.poly * sq.poly;
  EXPECT_EQ(sum, rho);
  EXPECT_TRUE(verify_certificate(rho, c).ok);
}

TEST(Certify, QuarticRhoHasWitness) {
  MultiPoly rho = build_rho(BundleSpec::make(2, 2)).poly;
  Certificate c = certify(rho, {});
  ASSERT_TRUE(std::holds_alternative<SosWitness>(c.kind)) << c.kind_name();
  const auto& w = std::get<SosWitness>(c.kind);
  EXPECT_GE(w.squares.size(), 3u);
  MultiPoly sum(6);
  for (const auto& sq : w.squares) sum = sum + sq.weight * sq.poly * sq.poly;
  Rational worst = 0, scale = 0;
  for (const auto& [m, coeff] : (sum - rho).terms()) worst = std::max(worst, abs(coeff));
  for (const auto& [m, coeff] : rho.terms()) scale = std::max(scale, abs(coeff));
  EXPECT_LE(Rational(worst / scale).get_d(), 1e-6);
  VerificationReport v = verify_certificate(rho, c);
  EXPECT_TRUE(v.ok) << v.detail;
}

TEST(Certify, SdpOnlyQuarticRho) {
  MultiPoly rho = build_rho(BundleSpec::make(2, 2)).poly;
  CertifyOptions opts;
  opts.mode = CertifyMode::SdpOnly;
  Certificate c = certify(rho, opts);
  ASSERT_TRUE(std::holds_alternative<SosWitness>(c.kind)) << c.kind_name();
  EXPECT_TRUE(verify_certificate(rho, c).ok);
}

TEST(Certify, ProductOfVariablesIsNotSos) {
  MultiPoly p = var(2, 0) * var(2, 1);
  Certificate c = certify(p, {});
  EXPECT_TRUE(std::holds_alternative<NonSosExact>(c.kind) || std::holds_alternative<NonSosNumeric>(c.kind))
      << c.kind_name() << " via " << c.branch;
}

TEST(Certify, NeverSosForNegativeValues) {
  Sampler s(63);
  for (int k = 0; k < 10; ++k) {
    // x0^2 x1^2 - c x0^4 + x1^4 is negative at (1, 0) for c > 0.
    const Rational c = make_rational(s.uniform_int(1, 9), s.uniform_int(1, 5));
    MultiPoly p = var(2, 0) * var(2, 0) * var(2, 1) * var(2, 1) - c * var(2, 0).pow(4) + var(2, 1).pow(4);
    Certificate cert = certify(p, {});
    EXPECT_FALSE(std::holds_alternative<SosWitness>(cert.kind));
  }
}

TEST(Certify, CubicRhoWithZerosIsNotSos) {
  MultiPoly rho = build_rho(BundleSpec::make(3, 3)).poly;
  auto zeros = rho3_zeros(42, 25, 4);
  ASSERT_EQ(zeros.size(), 100u);
  Certificate c = certify(rho, {}, zeros);
  ASSERT_TRUE(std::holds_alternative<NonSosExact>(c.kind) || std::holds_alternative<NonSosNumeric>(c.kind))
      << c.kind_name() << " via " << c.branch;
  EXPECT_FALSE(c.branch.empty());
  EXPECT_TRUE(verify_certificate(rho, c, zeros).ok);
  if (const auto* ex = std::get_if<NonSosExact>(&c.kind)) {
    GramProblem prob = facial_reduce(gram_system(rho), zeros);
    EXPECT_EQ(prob.face->dim(), ex->face_dim);
    if (ex->witness.functional) {
      EXPECT_TRUE(verify_span_witness(prob, ex->witness));
    } else {
      EXPECT_TRUE(modular_witness_holds(prob, ex->witness));
    }
  }
}
