#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rrl/gram.hpp"

namespace rrl {

struct SdpOptions {
  double tol = 1e-8;
  std::size_t max_iter = 50000;
  std::size_t check_every = 50;
};

enum class SdpStatus { Feasible, Infeasible, Undecided };

struct SdpResult {
  SdpStatus status = SdpStatus::Undecided;
  // Full-basis Gram matrix U G U^T (Feasible only).
  Eigen::MatrixXd gram;
  // Face coordinates G and the orthonormal face basis U.
  Eigen::MatrixXd face_gram;
  Eigen::MatrixXd face_basis;
  double residual = 0.0;          // max coefficient mismatch of `gram`
  double min_eigenvalue = 0.0;    // of face_gram
  // Infeasible: separating direction S in face coordinates with
  // <S, G> = -margin on the affine set, |S| = 1, S nearly PSD.
  Eigen::MatrixXd separator;
  double margin = 0.0;
  double separator_min_eigenvalue = 0.0;
  bool linear_infeasible = false;
  std::size_t iterations = 0;
  std::string note;
};

// Searches for a PSD Gram matrix on the problem's face (all of R^N when no
// face is set) by Dykstra projections. N <= 150.
SdpResult sdp_feasible(const GramProblem& prob, const SdpOptions& opts = {});

struct SeparatorCheck {
  double margin = 0.0;          // -<S, G> on the affine set, S normalized
  double fit_residual = 0.0;    // distance of S from the constraint row space
  double min_eigenvalue = 0.0;  // of S
};

// Recomputes the margin of a separating direction from scratch.
SeparatorCheck check_separator(const GramProblem& prob, const Eigen::MatrixXd& face_basis,
                               const Eigen::MatrixXd& separator);

struct FloatSquare {
  double weight = 0.0;
  std::vector<double> coeffs;  // over the basis monomials
};

// Eigen-decomposition of a PSD Gram matrix into weighted squares.
std::vector<FloatSquare> extract_squares(const Eigen::MatrixXd& gram, double tol);

Eigen::MatrixXd to_double(const Matrix<Rational>& m);
// Exact dyadic value of each double.
Matrix<Rational> to_exact(const Eigen::MatrixXd& m);
Rational exact_from_double(double x);

}  // namespace rrl
