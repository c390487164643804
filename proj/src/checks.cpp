#include "rrl/checks.hpp"

#include "rrl/errors.hpp"

namespace rrl {

NonnegativityReport sample_nonnegativity(const MultiPoly& p, std::size_t count, Sampler& sampler,
                                         std::int64_t bound, std::int64_t den) {
  if (!p.is_homogeneous() || p.is_zero()) throw UsageError("nonnegativity sampling needs a nonzero homogeneous polynomial");
  const IntegerEvaluator eval(p);
  const unsigned deg = *p.degree();
  NonnegativityReport report;
  Integer best;
  std::vector<Integer> best_point;
  std::vector<Integer> x(p.var_count());
  for (std::size_t s = 0; s < count; ++s) {
    for (auto& xi : x) xi = sampler.uniform_int(-bound, bound);
    const Integer v = eval.evaluate(x);
    if (v < 0) ++report.negatives;
    if (s == 0 || v < best) {
      best = v;
      best_point = x;
    }
  }
  report.samples = count;
  if (count == 0) return report;
  // p(x / den) = v / (scale * den^deg) by homogeneity.
  Integer denom = eval.scale();
  for (unsigned k = 0; k < deg; ++k) denom *= den;
  report.min_value = Rational(best, denom);
  report.min_value.canonicalize();
  for (const auto& xi : best_point) {
    Rational q(xi, Integer(den));
    q.canonicalize();
    report.argmin.push_back(q);
  }
  return report;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return out;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
}

HessianProbe::HessianProbe(const MultiPoly& p) : poly_(p), hessian_(hessian(p)) {}

Matrix<Rational> HessianProbe::at(std::span<const Rational> point) const { return evaluate(hessian_, point); }

ZeroDiagnostics HessianProbe::analyze(std::span<const Rational> point) const {
  ZeroDiagnostics d;
  d.value = evaluate(poly_, point);
  const Matrix<Rational> h = at(point);
  const PsdReport psd = check_psd(h);
  d.hessian_psd = psd.psd;
  d.hessian_rank = exact_rank(h);

  // Minors of a uniformly scaled integer matrix vanish exactly when those of h do.
  Integer l = 1;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    for (std::size_t j = 0; j < h.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), h(i, j).get_den_mpz_t());
  }
  Matrix<Integer> hi(h.rows(), h.cols(), Integer(0));
  for (std::size_t i = 0; i < h.rows(); ++i) {
    for (std::size_t j = 0; j < h.cols(); ++j) hi(i, j) = (l / h(i, j).get_den()) * h(i, j).get_num();
  }

  const std::size_t n = h.rows();
  d.all_minors5_vanish = true;
  const auto sets5 = subsets(n, 5);
  for (const auto& rs : sets5) {
    for (const auto& cs : sets5) {
      ++d.minors5_checked;
      if (determinant(hi.submatrix(rs, cs)) != 0) d.all_minors5_vanish = false;
    }
  }
  const auto sets4 = subsets(n, 4);
  for (const auto& rs : sets4) {
    for (const auto& cs : sets4) {
      if (determinant(hi.submatrix(rs, cs)) != 0) {
        d.some_minor4_nonzero = true;
        break;
      }
    }
    if (d.some_minor4_nonzero) break;
  }
  return d;
}

}  // namespace rrl
