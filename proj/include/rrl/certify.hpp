#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "rrl/facial.hpp"
#include "rrl/gram.hpp"
#include "rrl/multipoly.hpp"

namespace rrl {

enum class CertifyMode { Auto, ExactOnly, SdpOnly };

CertifyMode parse_mode(const std::string& text);
std::string mode_name(CertifyMode mode);

struct WeightedSquare {
  Rational weight;
  MultiPoly poly;
};

// target ~ sum weight * poly^2. `residual` is the exact max coefficient error.
struct SosWitness {
  std::vector<WeightedSquare> squares;
  bool exact = false;
  Rational residual;
};

struct NonSosExact {
  std::size_t zero_count = 0;
  std::size_t face_dim = 0;
  SpanWitness witness;
};

struct NonSosNumeric {
  double margin = 0.0;
  double separator_min_eigenvalue = 0.0;
  bool linear = false;
  std::size_t face_dim = 0;
  // Separator in face coordinates with its orthonormal face basis; empty
  // for linear infeasibility.
  Eigen::MatrixXd separator;
  Eigen::MatrixXd face_basis;
};

struct Undecided {
  std::string reason;
};

struct Certificate {
  std::variant<SosWitness, NonSosExact, NonSosNumeric, Undecided> kind;
  std::string branch;
  CertifyMode mode = CertifyMode::Auto;
  std::size_t basis_size = 0;
  std::size_t zero_count = 0;
  std::optional<std::size_t> face_dim;
  std::optional<SpanCheck> span;
  std::size_t sdp_iterations = 0;
  std::optional<double> sdp_residual;
  std::vector<std::string> trail;

  std::string kind_name() const;
};

struct CertifyOptions {
  CertifyMode mode = CertifyMode::Auto;
  double tol = 1e-8;
  std::size_t max_iter = 50000;
  std::uint64_t seed = 0;
  std::size_t sanity_samples = 10000;
  std::size_t exact_gram_limit = 600;  // unknowns in the exact Gram solve
};

Certificate certify(const MultiPoly& p, const CertifyOptions& opts, const std::vector<RationalVector>& zeros = {});

struct VerificationReport {
  bool ok = false;
  std::string detail;
  std::optional<Rational> residual;          // recomputed, SOS only
  std::optional<double> relative_residual;   // residual / max |coefficient|
  std::optional<double> margin;              // recomputed, numeric non-SOS only
};

// Independent re-check; the non-SOS exact case replays facial reduction on
// the same zeros.
VerificationReport verify_certificate(const MultiPoly& p, const Certificate& cert,
                                      const std::vector<RationalVector>& zeros = {});

// sum weight * poly^2.
MultiPoly recompose(const std::vector<WeightedSquare>& squares, std::size_t var_count);
Rational max_coefficient_error(const MultiPoly& a, const MultiPoly& b);

}  // namespace rrl
