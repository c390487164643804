#include "rrl/multipoly.hpp"

#include <algorithm>
#include <string>

#include "rrl/errors.hpp"

namespace rrl {

namespace {

void require_same_vars(const MultiPoly& p, const MultiPoly& q) {
  if (p.var_count() != q.var_count()) {
    throw UsageError("variable count mismatch: " + std::to_string(p.var_count()) + " vs " +
                     std::to_string(q.var_count()));
  }
}

void enumerate_degree(std::size_t n, unsigned d, std::size_t slot, std::vector<unsigned>& cur,
                      std::vector<Monomial>& out) {
  if (slot + 1 == n) {
    cur[slot] = d;
    out.emplace_back(cur);
    return;
  }
  for (unsigned e = d + 1; e-- > 0;) {
    cur[slot] = e;
    enumerate_degree(n, d - e, slot + 1, cur, out);
  }
  cur[slot] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
  if (n == 0) throw UsageError("monomials need at least one variable");
  std::vector<Monomial> out;
  std::vector<unsigned> cur(n, 0);
  enumerate_degree(n, d, 0, cur, out);
  return out;
}

MultiPoly::MultiPoly(std::size_t var_count) : var_count_(var_count) {
  if (var_count == 0) throw UsageError("MultiPoly needs a positive variable count");
}

MultiPoly::MultiPoly(std::size_t var_count, TermMap terms) : MultiPoly(var_count) {
  for (auto& [m, c] : terms) {
    if (m.var_count() != var_count) throw UsageError("monomial length differs from variable count");
    if (c != 0) terms_.emplace(m, std::move(c));
  }
}

MultiPoly MultiPoly::constant(std::size_t var_count, const Rational& c) {
  MultiPoly p(var_count);
  if (c != 0) p.terms_.emplace(Monomial(var_count), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t var_count, std::size_t var) {
  if (var >= var_count) throw UsageError("variable index out of range");
  MultiPoly p(var_count);
  p.terms_.emplace(Monomial::unit(var_count, var), Rational(1));
  return p;
}

MultiPoly MultiPoly::term(const Monomial& m, const Rational& c) {
  MultiPoly p(m.var_count());
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

MultiPoly MultiPoly::linear(std::span<const Rational> coeffs) {
  MultiPoly p(coeffs.size());
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] != 0) p.terms_.emplace(Monomial::unit(coeffs.size(), j), coeffs[j]);
  }
  return p;
}

std::optional<unsigned> MultiPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.degree();
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_.begin()->first.degree();
  return terms_.rbegin()->first.degree() == d;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::content() const {
  Integer g = 0, l = 1;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  if (g == 0) return Rational(0);
  Rational r(abs(g), l);
  r.canonicalize();
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly operator+(const MultiPoly& p, const MultiPoly& q) {
  require_same_vars(p, q);
  MultiPoly r = p;
  for (const auto& [m, c] : q.terms_) {
    auto [it, inserted] = r.terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) r.terms_.erase(it);
    }
  }
  return r;
}

MultiPoly operator-(const MultiPoly& p, const MultiPoly& q) { return p + (-q); }

MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
  require_same_vars(p, q);
  MultiPoly r(p.var_count_);
  for (const auto& [mp, cp] : p.terms_) {
    for (const auto& [mq, cq] : q.terms_) {
      Rational prod = cp * cq;
      auto [it, inserted] = r.terms_.try_emplace(mp * mq, prod);
      if (!inserted) it->second += prod;
    }
  }
  std::erase_if(r.terms_, [](const auto& kv) { return kv.second == 0; });
  return r;
}

MultiPoly operator*(const Rational& c, const MultiPoly& p) {
  if (c == 0) return MultiPoly(p.var_count_);
  MultiPoly r = p;
  for (auto& [m, v] : r.terms_) v *= c;
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(var_count_, Rational(1));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

MultiPoly pow(const MultiPoly& p, unsigned e) { return p.pow(e); }

bool operator==(const MultiPoly& p, const MultiPoly& q) {
  return p.var_count_ == q.var_count_ && p.terms_ == q.terms_;
}

Rational evaluate(const MultiPoly& p, std::span<const Rational> point) {
  if (point.size() != p.var_count()) {
    throw UsageError("evaluation point has " + std::to_string(point.size()) + " coordinates, expected " +
                     std::to_string(p.var_count()));
  }
  Rational sum = 0;
  Rational term;
  for (const auto& [m, c] : p.terms()) {
    term = c;
    for (std::size_t i = 0; i < point.size() && term != 0; ++i) {
      for (unsigned k = 0; k < m[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

MultiPoly partial_derivative(const MultiPoly& p, std::size_t var) {
  if (var >= p.var_count()) throw UsageError("derivative variable index out of range");
  MultiPoly::TermMap out;
  for (const auto& [m, c] : p.terms()) {
    if (m[var] == 0) continue;
    out.emplace(m.lowered(var), c * m[var]);
  }
  return MultiPoly(p.var_count(), std::move(out));
}

Matrix<MultiPoly> hessian(const MultiPoly& p) {
  const std::size_t n = p.var_count();
  Matrix<MultiPoly> h(n, n, MultiPoly(n));
  for (std::size_t i = 0; i < n; ++i) {
    const MultiPoly di = partial_derivative(p, i);
    for (std::size_t j = i; j < n; ++j) {
      h(i, j) = partial_derivative(di, j);
      h(j, i) = h(i, j);
    }
  }
  return h;
}

Matrix<Rational> evaluate(const Matrix<MultiPoly>& m, std::span<const Rational> point) {
  Matrix<Rational> r(m.rows(), m.cols(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = evaluate(m(i, j), point);
  }
  return r;
}

Matrix<Rational> hessian_at(const MultiPoly& p, std::span<const Rational> point) {
  if (point.size() != p.var_count()) throw UsageError("Hessian point length mismatch");
  return evaluate(hessian(p), point);
}

IntegerEvaluator::IntegerEvaluator(const MultiPoly& p) : var_count_(p.var_count()), scale_(1) {
  for (const auto& [m, c] : p.terms()) {
    mpz_lcm(scale_.get_mpz_t(), scale_.get_mpz_t(), c.get_den_mpz_t());
  }
  for (const auto& [m, c] : p.terms()) {
    Rational scaled = c * scale_;
    coeffs_.push_back(scaled.get_num());
    exps_.emplace_back(m.exponents().begin(), m.exponents().end());
    for (unsigned e : m.exponents()) max_exp_ = std::max(max_exp_, e);
  }
}

Integer IntegerEvaluator::evaluate(std::span<const Integer> point) const {
  if (point.size() != var_count_) throw UsageError("evaluation point length mismatch");
  // powers[i][e] = point[i]^e
  std::vector<std::vector<Integer>> powers(var_count_, std::vector<Integer>(max_exp_ + 1));
  for (std::size_t i = 0; i < var_count_; ++i) {
    powers[i][0] = 1;
    for (unsigned e = 1; e <= max_exp_; ++e) powers[i][e] = powers[i][e - 1] * point[i];
  }
  Integer sum = 0, term;
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    term = coeffs_[t];
    for (std::size_t i = 0; i < var_count_; ++i) {
      if (exps_[t][i] != 0) term *= powers[i][exps_[t][i]];
    }
    sum += term;
  }
  return sum;
}

}  // namespace rrl
