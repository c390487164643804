#include "rrl/bundle.hpp"

#include <algorithm>
#include <charconv>

#include "rrl/errors.hpp"

namespace rrl {

BundleSpec BundleSpec::make(unsigned m, unsigned n) {
  if (m % 2 == 0 && n % 2 == 0) return {m, n, Flavor::Even};
  if (m == n) return {m, n, Flavor::OddDiag};
  throw UsageError("O(" + std::to_string(m) + ")+O(" + std::to_string(n) +
                   ") carries no real structure for the antipodal map");
}

BundleSpec BundleSpec::parse(std::string_view text) {
  auto fail = [&]() -> BundleSpec {
    throw UsageError("bundle must be written as O(m)+O(n), got '" + std::string(text) + "'");
  };
  auto read = [&](std::string_view& s, unsigned& out) -> bool {
    if (!s.starts_with("O(")) return false;
    s.remove_prefix(2);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc() || ptr == s.data()) return false;
    s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
    if (!s.starts_with(")")) return false;
    s.remove_prefix(1);
    return true;
  };
  std::string_view s = text;
  unsigned m = 0, n = 0;
  if (!read(s, m) || !s.starts_with("+")) return fail();
  s.remove_prefix(1);
  if (!read(s, n) || !s.empty()) return fail();
  return make(m, n);
}

std::string BundleSpec::to_string() const {
  return "O(" + std::to_string(m) + ")+O(" + std::to_string(n) + ")";
}

std::string_view flavor_name(Flavor f) { return f == Flavor::Even ? "even" : "odd-diagonal"; }

std::vector<ComplexScalar> tau_action(unsigned k, const std::vector<ComplexScalar>& coeffs) {
  if (coeffs.size() != k + 1) throw UsageError("tau action needs k + 1 coefficients");
  std::vector<ComplexScalar> out(k + 1);
  for (unsigned i = 0; i <= k; ++i) {
    const ComplexScalar c = coeffs[k - i].conj();
    out[i] = (i % 2 == 0) ? -c : c;
  }
  return out;
}

std::vector<RationalVector> tau_fixed_basis(unsigned k) {
  const std::size_t dim = 2 * (k + 1);
  // Rows of (T - I) with columns reversed, so pivots land on high indices and
  // the free parameters are the low-index coordinates.
  Matrix<Rational> a(dim, dim, Rational(0));
  auto rev = [dim](std::size_t c) { return dim - 1 - c; };
  for (unsigned i = 0; i <= k; ++i) {
    const Rational s = (i % 2 == 0) ? -1 : 1;  // (-1)^(i+1)
    const std::size_t src = k - i;
    a(2 * i, rev(2 * src)) += s;           // Re tau_i = s Re c_src
    a(2 * i + 1, rev(2 * src + 1)) += -s;  // Im tau_i = -s Im c_src
    a(2 * i, rev(2 * i)) -= 1;
    a(2 * i + 1, rev(2 * i + 1)) -= 1;
  }
  auto kernel = exact_kernel(a);
  for (auto& v : kernel) std::reverse(v.begin(), v.end());
  std::reverse(kernel.begin(), kernel.end());
  return kernel;
}

RealChart::RealChart(BundleSpec spec, std::vector<LinearComplexForm> f, std::vector<LinearComplexForm> g)
    : spec_(spec), real_dim_(f.empty() ? 0 : f.front().re.size()), f_(std::move(f)), g_(std::move(g)) {
  if (f_.size() != spec_.m + 1 || g_.size() != spec_.n + 1) throw UsageError("chart coefficient count mismatch");
  if (real_dim_ == 0) throw UsageError("chart must have a positive real dimension");
}

namespace {

ComplexUniPoly symbolic(const std::vector<LinearComplexForm>& forms) {
  std::vector<ComplexPoly> coeffs;
  for (const auto& c : forms) coeffs.emplace_back(MultiPoly::linear(c.re), MultiPoly::linear(c.im));
  return ComplexUniPoly(std::move(coeffs));
}

Rational dot(const RationalVector& a, std::span<const Rational> b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) s += a[i] * b[i];
  }
  return s;
}

std::vector<ComplexScalar> at(const std::vector<LinearComplexForm>& forms, std::span<const Rational> p,
                              std::size_t dim) {
  if (p.size() != dim) throw UsageError("chart parameter vector has the wrong length");
  std::vector<ComplexScalar> out;
  for (const auto& c : forms) out.push_back({dot(c.re, p), dot(c.im, p)});
  return out;
}

}  // namespace

ComplexUniPoly RealChart::f_symbolic() const { return symbolic(f_); }
ComplexUniPoly RealChart::g_symbolic() const { return symbolic(g_); }

std::vector<ComplexScalar> RealChart::f_at(std::span<const Rational> params) const {
  return at(f_, params, real_dim_);
}
std::vector<ComplexScalar> RealChart::g_at(std::span<const Rational> params) const {
  return at(g_, params, real_dim_);
}

Matrix<Rational> RealChart::coefficient_map() const {
  Matrix<Rational> out(2 * (f_.size() + g_.size()), real_dim_, Rational(0));
  std::size_t row = 0;
  for (const auto* list : {&f_, &g_}) {
    for (const auto& c : *list) {
      for (std::size_t j = 0; j < real_dim_; ++j) {
        out(row, j) = c.re[j];
        out(row + 1, j) = c.im[j];
      }
      row += 2;
    }
  }
  return out;
}

RealChart build_chart(const BundleSpec& spec) {
  const BundleSpec checked = BundleSpec::make(spec.m, spec.n);
  if (checked.flavor != spec.flavor) throw UsageError("bundle flavor does not match its degrees");

  if (spec.flavor == Flavor::OddDiag) {
    const unsigned m = spec.m;
    const std::size_t dim = 2 * (m + 1);
    std::vector<LinearComplexForm> f(m + 1), g(m + 1);
    for (unsigned i = 0; i <= m; ++i) {
      f[i] = {RationalVector(dim, Rational(0)), RationalVector(dim, Rational(0))};
      f[i].re[2 * i] = 1;
      f[i].im[2 * i + 1] = 1;
      const Rational s = (i % 2 == 0) ? 1 : -1;
      const unsigned src = m - i;
      g[i] = {RationalVector(dim, Rational(0)), RationalVector(dim, Rational(0))};
      g[i].re[2 * src] = s;
      g[i].im[2 * src + 1] = -s;
    }
    return RealChart(spec, std::move(f), std::move(g));
  }

  const auto fb = tau_fixed_basis(spec.m);
  const auto gb = tau_fixed_basis(spec.n);
  const std::size_t dim = fb.size() + gb.size();
  auto forms = [dim](const std::vector<RationalVector>& basis, unsigned k, std::size_t offset) {
    std::vector<LinearComplexForm> out(k + 1, {RationalVector(dim, Rational(0)), RationalVector(dim, Rational(0))});
    for (std::size_t b = 0; b < basis.size(); ++b) {
      for (unsigned i = 0; i <= k; ++i) {
        out[i].re[offset + b] = basis[b][2 * i];
        out[i].im[offset + b] = basis[b][2 * i + 1];
      }
    }
    return out;
  };
  return RealChart(spec, forms(fb, spec.m, 0), forms(gb, spec.n, fb.size()));
}

}  // namespace rrl
