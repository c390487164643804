#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rrl/complex_poly.hpp"
#include "rrl/linalg.hpp"

namespace rrl {

// Rank-2 bundles O(m)+O(n) on the line with the antipodal involution:
// both degrees even with diagonal action, or m == n odd with the twisted
// action (u, v) -> (tau v, -tau u).
enum class Flavor { Even, OddDiag };

struct BundleSpec {
  unsigned m = 0;
  unsigned n = 0;
  Flavor flavor = Flavor::Even;

  // Derives the flavor; throws UsageError for unsupported degree pairs.
  static BundleSpec make(unsigned m, unsigned n);
  // Parses "O(m)+O(n)".
  static BundleSpec parse(std::string_view text);

  unsigned total_degree() const { return m + n; }
  std::string to_string() const;
  friend bool operator==(const BundleSpec&, const BundleSpec&) = default;
};

std::string_view flavor_name(Flavor f);

// Action of the antilinear lift on degree-k sections:
//   tau(sum c_i z^i) = sum (-1)^(i+1) conj(c_{k-i}) z^i.
std::vector<ComplexScalar> tau_action(unsigned k, const std::vector<ComplexScalar>& coeffs);

// Real-linear expression of one complex coefficient in the chart parameters.
struct LinearComplexForm {
  RationalVector re;
  RationalVector im;
};

// Parametrization of the tau-invariant section pairs (f, g) by R^real_dim.
class RealChart {
 public:
  RealChart(BundleSpec spec, std::vector<LinearComplexForm> f, std::vector<LinearComplexForm> g);

  const BundleSpec& spec() const { return spec_; }
  std::size_t real_dim() const { return real_dim_; }
  const std::vector<LinearComplexForm>& f_forms() const { return f_; }
  const std::vector<LinearComplexForm>& g_forms() const { return g_; }

  // Sections with coefficients linear in the chart variables.
  ComplexUniPoly f_symbolic() const;
  ComplexUniPoly g_symbolic() const;

  std::vector<ComplexScalar> f_at(std::span<const Rational> params) const;
  std::vector<ComplexScalar> g_at(std::span<const Rational> params) const;

  // The real-linear map R^real_dim -> R^(2(m+1) + 2(n+1)), rows ordered
  // (Re f_0, Im f_0, ..., Re g_n, Im g_n).
  Matrix<Rational> coefficient_map() const;

 private:
  BundleSpec spec_;
  std::size_t real_dim_;
  std::vector<LinearComplexForm> f_;
  std::vector<LinearComplexForm> g_;
};

// Even: product of the tau-fixed subspaces, each extracted as an exact kernel
// with basis ordered by coefficient index then (re, im).
// OddDiag: variable 2j = Re a_j, 2j+1 = Im a_j, and g_i = (-1)^i conj(a_{m-i}).
RealChart build_chart(const BundleSpec& spec);

// Basis of the tau-fixed subspace of degree-k sections, as vectors in
// (Re c_0, Im c_0, ..., Re c_k, Im c_k) coordinates.
std::vector<RationalVector> tau_fixed_basis(unsigned k);

}  // namespace rrl
