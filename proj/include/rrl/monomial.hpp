#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace rrl {

// Exponent vector with one slot per variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t var_count) : exps_(var_count, 0) {}
  explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<unsigned> exps) : exps_(exps) {}

  static Monomial unit(std::size_t var_count, std::size_t var) {
    Monomial m(var_count);
    m.exps_.at(var) = 1;
    return m;
  }

  std::size_t var_count() const { return exps_.size(); }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  std::span<const unsigned> exponents() const { return exps_; }

  unsigned degree() const {
    unsigned d = 0;
    for (unsigned e : exps_) d += e;
    return d;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
    return r;
  }

  // Returns a copy with exponent `var` lowered by one; caller checks > 0.
  Monomial lowered(std::size_t var) const {
    Monomial r = *this;
    --r.exps_[var];
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  // Graded lexicographic: total degree first, then lex with x0 most significant.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.exps_ <=> b.exps_;
  }

 private:
  std::vector<unsigned> exps_;
};

// Canonical container order: descending graded-lex (highest monomial first).
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return a > b; }
};

// All monomials of exactly degree `d` in `n` variables, descending graded-lex.
std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d);

}  // namespace rrl
