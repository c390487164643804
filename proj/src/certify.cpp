#include "rrl/certify.hpp"

#include <algorithm>
#include <cmath>

#include "rrl/checks.hpp"
#include "rrl/errors.hpp"
#include "rrl/sampling.hpp"
#include "rrl/sdp.hpp"

namespace rrl {
namespace {

std::vector<RationalVector> face_vectors(const GramProblem& prob) {
  std::vector<RationalVector> out;
  if (prob.face) {
    for (const auto& v : prob.face->basis) out.push_back(to_rational(v));
    return out;
  }
  const std::size_t n = prob.basis.size();
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector e(n, Rational(0));
    e[i] = 1;
    out.push_back(std::move(e));
  }
  return out;
}

// Exact affine family of Gram matrices G (over face coordinates) with
// target = sum G_ab (w_a . m)(w_b . m).
struct ExactGram {
  std::vector<RationalVector> w;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  ExactSolver solver;
};

std::optional<ExactGram> exact_gram_system(const GramProblem& prob, std::size_t limit) {
  auto w = face_vectors(prob);
  const std::size_t k = w.size();
  const std::size_t unknowns = k * (k + 1) / 2;
  if (unknowns == 0 || unknowns > limit) return std::nullopt;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) pairs.emplace_back(a, b);
  }
  Matrix<Rational> a(prob.constraints.size(), unknowns, Rational(0));
  for (std::size_t col = 0; col < unknowns; ++col) {
    const auto [i, j] = pairs[col];
    const RationalVector coeffs = product_coefficients(prob, w[i], w[j]);
    for (std::size_t r = 0; r < coeffs.size(); ++r) {
      if (coeffs[r] != 0) a(r, col) = (i == j ? 1 : 2) * coeffs[r];
    }
  }
  ExactSolver solver(a, target_coefficients(prob));
  return ExactGram{std::move(w), std::move(pairs), std::move(solver)};
}

Matrix<Rational> gram_from_unknowns(const ExactGram& sys, const RationalVector& x) {
  const std::size_t k = sys.w.size();
  Matrix<Rational> g(k, k, Rational(0));
  for (std::size_t col = 0; col < sys.pairs.size(); ++col) {
    const auto [i, j] = sys.pairs[col];
    g(i, j) = x[col];
    g(j, i) = x[col];
  }
  return g;
}

// Squares of an exactly PSD face Gram matrix; nullopt when indefinite.
std::optional<std::vector<WeightedSquare>> exact_squares(const GramProblem& prob, const ExactGram& sys,
                                                         const Matrix<Rational>& g) {
  const auto factor = psd_factor(g);
  if (!factor) return std::nullopt;
  std::vector<WeightedSquare> out;
  for (const auto& t : *factor) {
    RationalVector coeffs(prob.basis.size(), Rational(0));
    for (std::size_t a = 0; a < sys.w.size(); ++a) {
      if (t.vector[a] == 0) continue;
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (sys.w[a][i] != 0) coeffs[i] += t.vector[a] * sys.w[a][i];
      }
    }
    out.push_back({t.weight, basis_polynomial(prob.basis, coeffs)});
  }
  return out;
}

Rational round_dyadic(double x, int bits) {
  const double scaled = std::nearbyint(std::ldexp(x, bits));
  Rational q = exact_from_double(scaled);
  mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(bits));
  return q;
}

// Face-coordinate Gram matrix from a numeric full-basis Gram matrix.
Eigen::MatrixXd face_coordinates(const ExactGram& sys, const Eigen::MatrixXd& gram) {
  const auto n = gram.rows();
  Eigen::MatrixXd w(n, static_cast<Eigen::Index>(sys.w.size()));
  for (std::size_t a = 0; a < sys.w.size(); ++a) {
    for (Eigen::Index i = 0; i < n; ++i) w(i, static_cast<Eigen::Index>(a)) = sys.w[a][static_cast<std::size_t>(i)].get_d();
  }
  const Eigen::MatrixXd pinv = w.completeOrthogonalDecomposition().pseudoInverse();
  return pinv * gram * pinv.transpose();
}

std::optional<std::vector<WeightedSquare>> round_to_exact(const GramProblem& prob, const ExactGram& sys,
                                                          const Eigen::MatrixXd& gram) {
  if (!sys.solver.consistent()) return std::nullopt;
  const Eigen::MatrixXd g = face_coordinates(sys, gram);
  for (int bits : {10, 16, 24, 32, 40}) {
    RationalVector free_values;
    for (std::size_t col : sys.solver.free_cols()) {
      const auto [i, j] = sys.pairs[col];
      free_values.push_back(round_dyadic(g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)), bits));
    }
    const RationalVector x = sys.solver.solve(free_values);
    if (auto sq = exact_squares(prob, sys, gram_from_unknowns(sys, x))) return sq;
  }
  return std::nullopt;
}

std::vector<WeightedSquare> float_squares(const GramProblem& prob, const Eigen::MatrixXd& gram, double tol) {
  std::vector<WeightedSquare> out;
  for (const auto& s : extract_squares(gram, tol)) {
    RationalVector coeffs;
    for (double c : s.coeffs) coeffs.push_back(exact_from_double(c));
    out.push_back({exact_from_double(s.weight), basis_polynomial(prob.basis, coeffs)});
  }
  return out;
}

Rational max_abs_coefficient(const MultiPoly& p) {
  Rational m = 0;
  for (const auto& [mono, c] : p.terms()) m = std::max(m, abs(c));
  return m;
}

}  // namespace

CertifyMode parse_mode(const std::string& text) {
  if (text == "auto") return CertifyMode::Auto;
  if (text == "exact-only") return CertifyMode::ExactOnly;
  if (text == "sdp-only") return CertifyMode::SdpOnly;
  throw UsageError("unknown certification mode '" + text + "'");
}

std::string mode_name(CertifyMode mode) {
  switch (mode) {
    case CertifyMode::Auto: return "auto";
    case CertifyMode::ExactOnly: return "exact-only";
    case CertifyMode::SdpOnly: return "sdp-only";
  }
  return "auto";
}

std::string Certificate::kind_name() const {
  switch (kind.index()) {
    case 0: return "SOSWitness";
    case 1: return "NonSOSExact";
    case 2: return "NonSOSNumeric";
    default: return "Undecided";
  }
}

MultiPoly recompose(const std::vector<WeightedSquare>& squares, std::size_t var_count) {
  MultiPoly sum(var_count);
  for (const auto& s : squares) sum = sum + s.weight * (s.poly * s.poly);
  return sum;
}

Rational max_coefficient_error(const MultiPoly& a, const MultiPoly& b) {
  return max_abs_coefficient(a - b);
}

Certificate certify(const MultiPoly& p, const CertifyOptions& opts, const std::vector<RationalVector>& zeros) {
  Certificate cert;
  cert.mode = opts.mode;
  GramProblem prob = gram_system(p);
  cert.basis_size = prob.basis.size();
  cert.zero_count = zeros.size();
  const bool exact_steps = opts.mode != CertifyMode::SdpOnly;
  const bool numeric_steps = opts.mode != CertifyMode::ExactOnly;

  const auto finish_sos = [&](std::vector<WeightedSquare> squares, bool exact, const std::string& branch) {
    const Rational residual = max_coefficient_error(recompose(squares, p.var_count()), p);
    Sampler sampler(opts.seed);
    const auto sanity = sample_nonnegativity(p, opts.sanity_samples, sampler);
    cert.branch = branch;
    if (sanity.negatives > 0) {
      cert.kind = Undecided{"SOS candidate rejected: polynomial is negative at a sampled point"};
      cert.trail.push_back("sanity sampling found a negative value");
      return cert;
    }
    cert.trail.push_back("sanity sampling: " + std::to_string(sanity.samples) + " points nonnegative");
    cert.kind = SosWitness{std::move(squares), exact, residual};
    return cert;
  };

  if (!zeros.empty()) {
    prob = facial_reduce(prob, zeros);
    cert.face_dim = prob.face->dim();
    cert.trail.push_back("facial reduction: " + std::to_string(zeros.size()) + " zeros, face dimension " +
                         std::to_string(prob.face->dim()));
  }

  std::optional<ExactGram> sys;
  if (exact_steps) {
    if (prob.face) {
      SpanCheck span = exact_span_check(prob);
      cert.span = span;
      cert.trail.push_back("span check: " + span.reason);
      if (span.verdict == SpanVerdict::NotInSpan) {
        cert.branch = "exact-span";
        cert.kind = NonSosExact{zeros.size(), prob.face->dim(), *span.witness};
        return cert;
      }
    }
    sys = exact_gram_system(prob, opts.exact_gram_limit);
    if (sys && sys->solver.consistent()) {
      const RationalVector x = sys->solver.particular();
      if (auto sq = exact_squares(prob, *sys, gram_from_unknowns(*sys, x))) {
        cert.trail.push_back("exact Gram completion is PSD");
        return finish_sos(std::move(*sq), true, "exact-gram");
      }
      cert.trail.push_back("exact Gram completion with free parameters at zero is not PSD");
    } else if (!sys) {
      cert.trail.push_back("exact Gram completion skipped: too many unknowns");
    }
  }

  if (numeric_steps) {
    SdpOptions so;
    so.tol = opts.tol;
    so.max_iter = opts.max_iter;
    const SdpResult res = sdp_feasible(prob, so);
    cert.sdp_iterations = res.iterations;
    cert.sdp_residual = res.residual;
    cert.trail.push_back("sdp: " + res.note);
    switch (res.status) {
      case SdpStatus::Feasible: {
        if (exact_steps && sys) {
          if (auto sq = round_to_exact(prob, *sys, res.gram)) {
            cert.trail.push_back("numeric Gram matrix rounded to an exact PSD solution");
            return finish_sos(std::move(*sq), true, "sdp-rounded");
          }
        }
        return finish_sos(float_squares(prob, res.gram, opts.tol), false, "sdp-feasible");
      }
      case SdpStatus::Infeasible: {
        NonSosNumeric ev;
        ev.margin = res.margin;
        ev.separator_min_eigenvalue = res.separator_min_eigenvalue;
        ev.linear = res.linear_infeasible;
        ev.face_dim = prob.face ? prob.face->dim() : prob.basis.size();
        ev.separator = res.separator;
        ev.face_basis = res.face_basis;
        cert.branch = res.linear_infeasible ? "sdp-linear" : "sdp-dual";
        cert.kind = std::move(ev);
        return cert;
      }
      case SdpStatus::Undecided:
        cert.branch = "sdp-undecided";
        cert.kind = Undecided{"semidefinite search hit the iteration cap (residual " + std::to_string(res.residual) + ")"};
        return cert;
    }
  }
  cert.branch = "exact-undecided";
  cert.kind = Undecided{"exact steps did not settle the question"};
  return cert;
}

VerificationReport verify_certificate(const MultiPoly& p, const Certificate& cert,
                                      const std::vector<RationalVector>& zeros) {
  VerificationReport rep;
  if (const auto* w = std::get_if<SosWitness>(&cert.kind)) {
    for (const auto& s : w->squares) {
      if (s.weight < 0) {
        rep.detail = "negative square weight";
        return rep;
      }
    }
    const Rational residual = max_coefficient_error(recompose(w->squares, p.var_count()), p);
    rep.residual = residual;
    const Rational scale = max_abs_coefficient(p);
    rep.relative_residual = scale == 0 ? residual.get_d() : Rational(residual / scale).get_d();
    rep.ok = residual <= w->residual;
    rep.detail = rep.ok ? "recomposition within the reported residual" : "recomposition exceeds the reported residual";
    return rep;
  }
  if (const auto* e = std::get_if<NonSosExact>(&cert.kind)) {
    GramProblem prob = facial_reduce(gram_system(p), zeros);
    if (prob.face->dim() != e->face_dim) {
      rep.detail = "replayed face dimension differs";
      return rep;
    }
    rep.ok = verify_span_witness(prob, e->witness);
    rep.detail = rep.ok ? "span witness re-checked" : "span witness rejected";
    return rep;
  }
  if (const auto* n = std::get_if<NonSosNumeric>(&cert.kind)) {
    if (n->linear) {
      rep.ok = n->margin > 0;
      rep.margin = n->margin;
      rep.detail = "coefficient system inconsistent on the face";
      return rep;
    }
    GramProblem prob = gram_system(p);
    if (!zeros.empty()) prob = facial_reduce(prob, zeros);
    const SeparatorCheck chk = check_separator(prob, n->face_basis, n->separator);
    rep.margin = chk.margin;
    rep.ok = chk.margin > 0 && chk.fit_residual < 1e-6 && chk.min_eigenvalue > -1e-6;
    rep.detail = "separator re-evaluated: margin " + std::to_string(chk.margin) + ", fit residual " +
                 std::to_string(chk.fit_residual) + ", min eigenvalue " + std::to_string(chk.min_eigenvalue);
    return rep;
  }
  rep.detail = "undecided certificates carry no evidence";
  return rep;
}

}  // namespace rrl
