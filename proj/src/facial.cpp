#include "rrl/facial.hpp"

#include "rrl/errors.hpp"
#include "rrl/rational.hpp"

namespace rrl {
namespace {

using u64 = std::uint64_t;

u64 mod_of(const Integer& x, u64 p) {
  static_assert(sizeof(unsigned long) == sizeof(u64));
  return mpz_fdiv_ui(x.get_mpz_t(), p);
}

u64 mul_mod(u64 a, u64 b, u64 p) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}

u64 add_mod(u64 a, u64 b, u64 p) {
  const u64 s = a + b;
  return s >= p ? s - p : s;
}

u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

u64 rational_mod(const Rational& q, u64 p) {
  const u64 den = mod_of(q.get_den(), p);
  if (den == 0) throw DomainError("denominator vanishes modulo the span prime");
  return mul_mod(mod_of(q.get_num(), p), inv_mod(den, p), p);
}

IntegerVector integer_point(const RationalVector& z) { return primitive_integer(z); }

std::vector<IntegerVector> face_or_identity(const GramProblem& prob) {
  if (prob.face) return prob.face->basis;
  std::vector<IntegerVector> id;
  const std::size_t n = prob.basis.size();
  for (std::size_t i = 0; i < n; ++i) {
    IntegerVector e(n, Integer(0));
    e[i] = 1;
    id.push_back(std::move(e));
  }
  return id;
}

std::vector<std::pair<std::size_t, std::size_t>> upper_pairs(std::size_t k) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) out.emplace_back(a, b);
  }
  return out;
}

// Coefficient of constraint c in (w_a . m)(w_b . m), generic over the ring.
template <class T, class Mul, class Add>
T product_entry(const GramConstraint& c, const std::vector<T>& wa, const std::vector<T>& wb, T zero, Mul mul,
                Add add) {
  T acc = zero;
  for (auto [i, j] : c.pairs) {
    acc = add(acc, mul(wa[i], wb[j]));
    if (i != j) acc = add(acc, mul(wa[j], wb[i]));
  }
  return acc;
}

std::vector<RationalVector> rational_face(const GramProblem& prob) {
  std::vector<RationalVector> out;
  for (const auto& v : prob.face->basis) out.push_back(to_rational(v));
  return out;
}

Rational exact_product(const GramConstraint& c, const RationalVector& wa, const RationalVector& wb) {
  const auto qmul = [](const Rational& x, const Rational& y) { return x * y; };
  const auto qadd = [](const Rational& x, const Rational& y) { return x + y; };
  return product_entry<Rational>(c, wa, wb, Rational(0), qmul, qadd);
}

// ell supported on `rows` with ell(product) = 0 for each listed product and
// ell(target) = 1. The restricted square system must be nonsingular.
CoefficientFunctional functional_on_rows(const GramProblem& prob, const std::vector<RationalVector>& wq,
                                         const std::vector<std::pair<std::size_t, std::size_t>>& products,
                                         const std::vector<std::size_t>& rows) {
  const std::size_t cols = products.size() + 1;
  Matrix<Rational> at(cols, rows.size(), Rational(0));
  for (std::size_t s = 0; s < rows.size(); ++s) {
    const auto& c = prob.constraints[rows[s]];
    for (std::size_t col = 0; col < products.size(); ++col) {
      at(col, s) = exact_product(c, wq[products[col].first], wq[products[col].second]);
    }
    at(cols - 1, s) = c.target;
  }
  RationalVector rhs(cols, Rational(0));
  rhs[cols - 1] = 1;
  const ExactSolver solver(at, rhs);
  if (!solver.consistent()) throw ConsistencyError("span witness rows are singular over Q");
  const RationalVector ell = solver.particular();
  CoefficientFunctional f;
  for (std::size_t s = 0; s < rows.size(); ++s) {
    if (ell[s] != 0) f.emplace_back(rows[s], ell[s]);
  }
  return f;
}

}  // namespace

RationalVector target_coefficients(const GramProblem& prob) {
  RationalVector out;
  out.reserve(prob.constraints.size());
  for (const auto& c : prob.constraints) out.push_back(c.target);
  return out;
}

GramProblem facial_reduce(const GramProblem& prob, const std::vector<RationalVector>& zeros) {
  const IntegerEvaluator eval(prob.target);
  std::vector<IntegerVector> rows;
  for (std::size_t k = 0; k < zeros.size(); ++k) {
    if (zeros[k].size() != prob.basis.n) {
      throw UsageError("point " + std::to_string(k) + " has the wrong dimension");
    }
    const IntegerVector z = integer_point(zeros[k]);
    if (eval.evaluate(z) != 0) {
      throw UsageError("point " + std::to_string(k) + " is not a zero of the polynomial");
    }
    bool nonzero = false;
    for (const auto& x : z) nonzero = nonzero || x != 0;
    if (nonzero) rows.push_back(monomial_vector(prob.basis, std::span<const Integer>(z)));
  }
  GramProblem out = prob;
  const std::vector<IntegerVector> current = face_or_identity(prob);
  const std::size_t k = current.size();
  if (!out.face) out.face = Face{};
  out.face->zero_count += zeros.size();
  if (rows.empty() || k == 0) {
    out.face->basis = current;
    return out;
  }
  Matrix<Rational> c(rows.size(), k, Rational(0));
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      Integer s = 0;
      for (std::size_t i = 0; i < rows[a].size(); ++i) {
        if (current[b][i] != 0 && rows[a][i] != 0) s += rows[a][i] * current[b][i];
      }
      c(a, b) = Rational(s);
    }
  }
  const auto kernel = exact_kernel(c);
  std::vector<IntegerVector> basis;
  for (const auto& kv : kernel) {
    RationalVector w(prob.basis.size(), Rational(0));
    for (std::size_t b = 0; b < k; ++b) {
      if (kv[b] == 0) continue;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (current[b][i] != 0) w[i] += kv[b] * current[b][i];
      }
    }
    basis.push_back(primitive_integer(w));
  }
  out.face->basis = std::move(basis);
  return out;
}

bool face_annihilates(const GramProblem& prob, const std::vector<RationalVector>& zeros) {
  const auto basis = face_or_identity(prob);
  for (const auto& z : zeros) {
    const IntegerVector zi = integer_point(z);
    const IntegerVector m = monomial_vector(prob.basis, std::span<const Integer>(zi));
    for (const auto& w : basis) {
      Integer s = 0;
      for (std::size_t i = 0; i < m.size(); ++i) s += m[i] * w[i];
      if (s != 0) return false;
    }
  }
  return true;
}

FaceTrace reduce_until_stable(GramProblem prob, const ZeroBatchSource& next, std::size_t batch,
                              std::size_t stable_after, std::size_t max_batches) {
  if (batch == 0 || stable_after == 0) throw UsageError("batch size and stability window must be positive");
  // Each step reduces the original problem by all zeros seen so far; one
  // kernel of the stacked rows keeps entries far smaller than chained kernels.
  FaceTrace trace;
  std::vector<RationalVector> seen;
  std::size_t unchanged = 0;
  std::optional<std::size_t> last;
  trace.problem = prob;
  for (std::size_t b = 0; b < max_batches; ++b) {
    const auto zeros = next(batch);
    if (zeros.empty()) break;
    seen.insert(seen.end(), zeros.begin(), zeros.end());
    trace.problem = facial_reduce(prob, seen);
    const std::size_t dim = trace.problem.face->dim();
    trace.steps.push_back({seen.size(), dim});
    if (last && *last == dim) {
      ++unchanged;
    } else {
      unchanged = 0;
    }
    last = dim;
    if (unchanged >= stable_after) {
      trace.stabilized = true;
      break;
    }
  }
  return trace;
}

Rational apply_functional(const CoefficientFunctional& ell, const RationalVector& coeffs) {
  Rational s = 0;
  for (const auto& [idx, w] : ell) s += w * coeffs.at(idx);
  return s;
}

SpanCheck exact_span_check(const GramProblem& prob, std::size_t functional_limit, std::size_t exact_limit) {
  if (!prob.face) throw UsageError("span check needs a reduced face");
  const u64 p = kSpanPrime;
  const auto& basis = prob.face->basis;
  const std::size_t k = basis.size();
  const auto pairs = upper_pairs(k);
  SpanCheck out;
  out.face_dim = k;
  out.products = pairs.size();
  const std::size_t cols = pairs.size() + 1;
  const std::size_t rows = prob.constraints.size();
  if (cols > rows) {
    out.reason = "more face products than coefficients";
    return out;
  }
  std::vector<std::vector<u64>> wmod(k);
  for (std::size_t a = 0; a < k; ++a) {
    for (const auto& x : basis[a]) wmod[a].push_back(mod_of(x, p));
  }
  // Row-major residues of [products | target].
  std::vector<std::vector<u64>> m(rows, std::vector<u64>(cols, 0));
  const auto mul = [p](u64 x, u64 y) { return mul_mod(x, y, p); };
  const auto add = [p](u64 x, u64 y) { return add_mod(x, y, p); };
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& c = prob.constraints[r];
    for (std::size_t col = 0; col < pairs.size(); ++col) {
      m[r][col] = product_entry<u64>(c, wmod[pairs[col].first], wmod[pairs[col].second], 0, mul, add);
    }
    m[r][cols - 1] = rational_mod(c.target, p);
  }
  std::vector<bool> used(rows, false);
  std::vector<std::size_t> pivot_rows;
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t piv = rows;
    for (std::size_t r = 0; r < rows; ++r) {
      if (!used[r] && m[r][col] != 0) {
        piv = r;
        break;
      }
    }
    if (piv == rows) continue;
    used[piv] = true;
    pivot_rows.push_back(piv);
    const u64 inv = inv_mod(m[piv][col], p);
    for (std::size_t r = 0; r < rows; ++r) {
      if (used[r] || m[r][col] == 0) continue;
      const u64 f = mul_mod(m[r][col], inv, p);
      for (std::size_t j = col; j < cols; ++j) m[r][j] = sub_mod(m[r][j], mul_mod(f, m[piv][j], p), p);
    }
  }
  out.rank_mod_p = pivot_rows.size();
  if (pivot_rows.size() == cols) {
    SpanWitness w;
    w.prime = p;
    w.rows = pivot_rows;
    for (std::size_t col = 0; col < pairs.size(); ++col) w.columns.push_back(col);
    if (cols <= functional_limit) w.functional = functional_on_rows(prob, rational_face(prob), pairs, pivot_rows);
    out.verdict = SpanVerdict::NotInSpan;
    out.exact_decision = true;
    out.witness = std::move(w);
    out.reason = "target outside the span of face products";
    return out;
  }
  if (pairs.size() > exact_limit) {
    out.reason = "augmented product matrix is rank deficient modulo the span prime";
    return out;
  }
  // Exact elimination: independent products first, then the target.
  const auto wq = rational_face(prob);
  Matrix<Rational> prod(rows, pairs.size(), Rational(0));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t col = 0; col < pairs.size(); ++col) {
      prod(r, col) = exact_product(prob.constraints[r], wq[pairs[col].first], wq[pairs[col].second]);
    }
  }
  const Echelon pe = fraction_free_echelon(clear_row_denominators(prod));
  std::vector<std::pair<std::size_t, std::size_t>> indep;
  for (std::size_t col : pe.pivot_cols) indep.push_back(pairs[col]);
  Matrix<Rational> aug_t(indep.size() + 1, rows, Rational(0));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t k2 = 0; k2 < pe.pivot_cols.size(); ++k2) aug_t(k2, r) = prod(r, pe.pivot_cols[k2]);
    aug_t(indep.size(), r) = prob.constraints[r].target;
  }
  const Echelon te = fraction_free_echelon(clear_row_denominators(aug_t));
  out.exact_decision = true;
  if (te.pivot_cols.size() < indep.size() + 1) {
    out.reason = "target lies in the span of face products";
    return out;
  }
  SpanWitness w;
  w.prime = p;
  w.rows = te.pivot_cols;
  w.columns = pe.pivot_cols;
  w.functional = functional_on_rows(prob, wq, indep, w.rows);
  out.verdict = SpanVerdict::NotInSpan;
  out.witness = std::move(w);
  out.reason = "target outside the span of face products";
  return out;
}

bool verify_span_witness(const GramProblem& prob, const SpanWitness& witness) {
  if (!prob.face) return false;
  const auto& basis = prob.face->basis;
  const std::size_t k = basis.size();
  const auto pairs = upper_pairs(k);
  const std::size_t cols = pairs.size() + 1;
  for (std::size_t r : witness.rows) {
    if (r >= prob.constraints.size()) return false;
  }
  if (witness.functional) {
    for (const auto& entry : *witness.functional) {
      if (entry.first >= prob.constraints.size()) return false;
    }
    const auto qmul = [](const Rational& x, const Rational& y) { return x * y; };
    const auto qadd = [](const Rational& x, const Rational& y) { return x + y; };
    std::vector<RationalVector> wq;
    for (const auto& v : basis) wq.push_back(to_rational(v));
    for (auto [a, b] : pairs) {
      Rational s = 0;
      for (const auto& [idx, weight] : *witness.functional) {
        s += weight * product_entry<Rational>(prob.constraints.at(idx), wq[a], wq[b], Rational(0), qmul, qadd);
      }
      if (s != 0) return false;
    }
    return apply_functional(*witness.functional, target_coefficients(prob)) != 0;
  }
  // Nonsingularity of the witness minor modulo the prime.
  if (witness.rows.size() != cols) return false;
  const u64 p = witness.prime;
  if (p < 3) return false;
  Integer pz;
  mpz_set_ui(pz.get_mpz_t(), p);
  if (!mpz_probab_prime_p(pz.get_mpz_t(), 30)) return false;
  std::vector<std::vector<u64>> wmod(k);
  for (std::size_t a = 0; a < k; ++a) {
    for (const auto& x : basis[a]) wmod[a].push_back(mod_of(x, p));
  }
  const auto mul = [p](u64 x, u64 y) { return mul_mod(x, y, p); };
  const auto add = [p](u64 x, u64 y) { return add_mod(x, y, p); };
  std::vector<std::vector<u64>> m(cols, std::vector<u64>(cols, 0));
  for (std::size_t s = 0; s < cols; ++s) {
    const auto& c = prob.constraints[witness.rows[s]];
    for (std::size_t col = 0; col < pairs.size(); ++col) {
      m[s][col] = product_entry<u64>(c, wmod[pairs[col].first], wmod[pairs[col].second], 0, mul, add);
    }
    m[s][cols - 1] = rational_mod(c.target, p);
  }
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t piv = cols;
    for (std::size_t r = col; r < cols; ++r) {
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    }
    if (piv == cols) return false;
    std::swap(m[piv], m[col]);
    const u64 inv = inv_mod(m[col][col], p);
    for (std::size_t r = col + 1; r < cols; ++r) {
      if (m[r][col] == 0) continue;
      const u64 f = mul_mod(m[r][col], inv, p);
      for (std::size_t j = col; j < cols; ++j) m[r][j] = sub_mod(m[r][j], mul_mod(f, m[col][j], p), p);
    }
  }
  return true;
}

}  // namespace rrl
