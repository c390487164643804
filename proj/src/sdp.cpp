#include "rrl/sdp.hpp"

#include <cmath>
#include <limits>
#include <memory>

#include "rrl/errors.hpp"

namespace rrl {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

const double kSqrt2 = std::sqrt(2.0);

std::size_t svec_size(std::size_t k) { return k * (k + 1) / 2; }

VectorXd svec(const MatrixXd& g) {
  const auto k = static_cast<std::size_t>(g.rows());
  VectorXd v(static_cast<Eigen::Index>(svec_size(k)));
  Eigen::Index t = 0;
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    v(t++) = g(i, i);
    for (Eigen::Index j = i + 1; j < g.cols(); ++j) v(t++) = kSqrt2 * g(i, j);
  }
  return v;
}

MatrixXd smat(const VectorXd& v, Eigen::Index k) {
  MatrixXd g(k, k);
  Eigen::Index t = 0;
  for (Eigen::Index i = 0; i < k; ++i) {
    g(i, i) = v(t++);
    for (Eigen::Index j = i + 1; j < k; ++j) {
      g(i, j) = g(j, i) = v(t++) / kSqrt2;
    }
  }
  return g;
}

struct PsdSplit {
  MatrixXd plus;
  double min_eig;
};

PsdSplit psd_project(const MatrixXd& g) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(g);
  VectorXd ev = es.eigenvalues();
  const double lo = ev.size() ? ev.minCoeff() : 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) ev(i) = std::max(ev(i), 0.0);
  return {es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().transpose(), lo};
}

double min_eig(const MatrixXd& g) {
  if (g.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(g, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

// Affine set {x : A x = b} in svec coordinates.
class Affine {
 public:
  virtual ~Affine() = default;
  virtual VectorXd project(const VectorXd& x) const = 0;
  // Orthogonal projection onto range(A^T).
  virtual VectorXd normal(const VectorXd& w) const = 0;
  virtual VectorXd residual(const VectorXd& x) const = 0;
  const VectorXd& anchor() const { return anchor_; }
  double inconsistency() const { return inconsistency_; }

 protected:
  VectorXd anchor_;  // minimum-norm least-squares point
  double inconsistency_ = 0.0;
};

// No face: each svec coordinate lies in exactly one constraint.
class PartitionAffine : public Affine {
 public:
  explicit PartitionAffine(const GramProblem& prob) : n_(prob.basis.size()) {
    const std::size_t m = prob.constraints.size();
    groups_.resize(m);
    b_.resize(static_cast<Eigen::Index>(m));
    for (std::size_t c = 0; c < m; ++c) {
      b_(static_cast<Eigen::Index>(c)) = prob.constraints[c].target.get_d();
      for (auto [i, j] : prob.constraints[c].pairs) {
        groups_[c].push_back({index(i, j), i == j ? 1.0 : kSqrt2});
      }
    }
    anchor_ = project(VectorXd::Zero(static_cast<Eigen::Index>(svec_size(n_))));
  }

  VectorXd project(const VectorXd& x) const override {
    VectorXd y = x;
    for (std::size_t c = 0; c < groups_.size(); ++c) {
      double dot = 0.0, nrm = 0.0;
      for (const auto& [t, a] : groups_[c]) {
        dot += a * x(t);
        nrm += a * a;
      }
      const double f = (dot - b_(static_cast<Eigen::Index>(c))) / nrm;
      for (const auto& [t, a] : groups_[c]) y(t) -= f * a;
    }
    return y;
  }

  VectorXd normal(const VectorXd& w) const override {
    VectorXd y = VectorXd::Zero(w.size());
    for (const auto& g : groups_) {
      double dot = 0.0, nrm = 0.0;
      for (const auto& [t, a] : g) {
        dot += a * w(t);
        nrm += a * a;
      }
      for (const auto& [t, a] : g) y(t) = a * dot / nrm;
    }
    return y;
  }

  VectorXd residual(const VectorXd& x) const override {
    VectorXd r(b_.size());
    for (std::size_t c = 0; c < groups_.size(); ++c) {
      double dot = 0.0;
      for (const auto& [t, a] : groups_[c]) dot += a * x(t);
      r(static_cast<Eigen::Index>(c)) = dot - b_(static_cast<Eigen::Index>(c));
    }
    return r;
  }

 private:
  Eigen::Index index(std::size_t i, std::size_t j) const {
    // Row-major upper triangle offset.
    return static_cast<Eigen::Index>(i * n_ - i * (i - 1) / 2 + (j - i));
  }

  std::size_t n_;
  std::vector<std::vector<std::pair<Eigen::Index, double>>> groups_;
  VectorXd b_;
};

// Reduced face: dense constraint matrix, orthonormal row-space basis.
class DenseAffine : public Affine {
 public:
  DenseAffine(const GramProblem& prob, const MatrixXd& u) {
    const Eigen::Index k = u.cols();
    const std::size_t m = prob.constraints.size();
    a_ = MatrixXd::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(svec_size(static_cast<std::size_t>(k))));
    b_.resize(static_cast<Eigen::Index>(m));
    for (std::size_t c = 0; c < m; ++c) {
      MatrixXd e = MatrixXd::Zero(u.rows(), u.rows());
      for (auto [i, j] : prob.constraints[c].pairs) {
        e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) += 1.0;
        if (i != j) e(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) += 1.0;
      }
      a_.row(static_cast<Eigen::Index>(c)) = svec(u.transpose() * e * u).transpose();
      b_(static_cast<Eigen::Index>(c)) = prob.constraints[c].target.get_d();
    }
    Eigen::CompleteOrthogonalDecomposition<MatrixXd> cod(a_);
    anchor_ = cod.solve(b_);
    inconsistency_ = (a_ * anchor_ - b_).cwiseAbs().maxCoeff();
    Eigen::ColPivHouseholderQR<MatrixXd> qr(a_.transpose());
    const Eigen::Index r = qr.rank();
    MatrixXd q = qr.householderQ();
    rowspace_ = q.leftCols(r);
  }

  VectorXd project(const VectorXd& x) const override {
    return x - rowspace_ * (rowspace_.transpose() * (x - anchor_));
  }
  VectorXd normal(const VectorXd& w) const override { return rowspace_ * (rowspace_.transpose() * w); }
  VectorXd residual(const VectorXd& x) const override { return a_ * x - b_; }

 private:
  MatrixXd a_;
  VectorXd b_;
  MatrixXd rowspace_;
};

MatrixXd orthonormal_face(const GramProblem& prob) {
  const auto& basis = prob.face->basis;
  const auto n = static_cast<Eigen::Index>(prob.basis.size());
  MatrixXd w(n, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t b = 0; b < basis.size(); ++b) {
    for (Eigen::Index i = 0; i < n; ++i) w(i, static_cast<Eigen::Index>(b)) = basis[b][static_cast<std::size_t>(i)].get_d();
  }
  if (w.cols() == 0) return w;
  Eigen::HouseholderQR<MatrixXd> qr(w);
  MatrixXd q = qr.householderQ();
  return q.leftCols(w.cols());
}

}  // namespace

SdpResult sdp_feasible(const GramProblem& prob, const SdpOptions& opts) {
  const std::size_t n = prob.basis.size();
  if (n > 150) throw UsageError("SDP limited to Gram bases of at most 150 monomials");
  if (!(opts.tol > 0)) throw UsageError("SDP tolerance must be positive");
  SdpResult res;
  const bool reduced = prob.face && prob.face->dim() < n;
  MatrixXd u = reduced ? orthonormal_face(prob) : MatrixXd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  const Eigen::Index k = u.cols();
  res.face_basis = u;
  std::unique_ptr<Affine> aff;
  if (reduced) {
    aff = std::make_unique<DenseAffine>(prob, u);
  } else {
    aff = std::make_unique<PartitionAffine>(prob);
  }
  const double tol = opts.tol;
  if (aff->inconsistency() > 10 * tol) {
    res.status = SdpStatus::Infeasible;
    res.linear_infeasible = true;
    res.margin = aff->inconsistency();
    res.note = "coefficient system has no solution on the face";
    return res;
  }
  const auto accept = [&](const MatrixXd& g, std::size_t it) {
    res.status = SdpStatus::Feasible;
    res.face_gram = g;
    res.gram = u * g * u.transpose();
    res.min_eigenvalue = min_eig(g);
    res.iterations = it;
    res.note = "feasible point within tolerance";
    return res;
  };
  if (k == 0) {
    res.residual = aff->residual(VectorXd::Zero(0)).cwiseAbs().maxCoeff();
    if (res.residual <= tol) return accept(MatrixXd::Zero(0, 0), 0);
    res.status = SdpStatus::Infeasible;
    res.linear_infeasible = true;
    res.margin = res.residual;
    res.note = "trivial face with nonzero target";
    return res;
  }
  VectorXd x = aff->anchor();
  VectorXd incr = VectorXd::Zero(x.size());
  const std::size_t every = std::max<std::size_t>(1, opts.check_every);
  double best_residual = std::numeric_limits<double>::infinity();
  for (std::size_t it = 1; it <= opts.max_iter; ++it) {
    const PsdSplit y = psd_project(smat(x + incr, k));
    const VectorXd yv = svec(y.plus);
    incr = x + incr - yv;
    x = aff->project(yv);
    if (it % every != 0 && it != opts.max_iter) continue;
    const PsdSplit z = psd_project(smat(x, k));
    const VectorXd zv = svec(z.plus);
    const double r = aff->residual(zv).cwiseAbs().maxCoeff();
    best_residual = std::min(best_residual, r);
    res.residual = r;
    if (r <= tol) return accept(z.plus, it);
    // The gap z - x is the PSD part removed; its normal component separates
    // when the affine set misses the cone.
    const VectorXd gap = zv - x;
    VectorXd s = aff->normal(gap);
    const double nrm = s.norm();
    if (nrm > 0) {
      s /= nrm;
      const double margin = -s.dot(aff->anchor());
      const MatrixXd sm = smat(s, k);
      const double lo = min_eig(sm);
      if (lo >= -tol && margin >= 10 * tol) {
        res.status = SdpStatus::Infeasible;
        res.separator = sm;
        res.margin = margin;
        res.separator_min_eigenvalue = lo;
        res.iterations = it;
        res.note = "separating direction found";
        return res;
      }
    }
  }
  res.iterations = opts.max_iter;
  res.residual = best_residual;
  res.note = "iteration cap reached";
  return res;
}

SeparatorCheck check_separator(const GramProblem& prob, const Eigen::MatrixXd& face_basis,
                               const Eigen::MatrixXd& separator) {
  const auto n = static_cast<Eigen::Index>(prob.basis.size());
  if (face_basis.rows() != n || separator.rows() != face_basis.cols() || separator.cols() != face_basis.cols()) {
    throw UsageError("separator dimensions do not match the face");
  }
  std::unique_ptr<Affine> aff;
  if (face_basis.cols() == n && face_basis.isIdentity()) {
    aff = std::make_unique<PartitionAffine>(prob);
  } else {
    aff = std::make_unique<DenseAffine>(prob, face_basis);
  }
  VectorXd sv = svec(0.5 * (separator + separator.transpose()));
  const double nrm = sv.norm();
  if (nrm == 0) throw UsageError("zero separator");
  sv /= nrm;
  const VectorXd proj = aff->normal(sv);
  SeparatorCheck out;
  out.fit_residual = (sv - proj).norm();
  out.margin = -proj.dot(aff->anchor());
  out.min_eigenvalue = min_eig(smat(sv, separator.rows()));
  return out;
}

std::vector<FloatSquare> extract_squares(const Eigen::MatrixXd& gram, double tol) {
  std::vector<FloatSquare> out;
  if (gram.rows() == 0) return out;
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(gram);
  const VectorXd& ev = es.eigenvalues();
  if (ev.minCoeff() < -tol) throw UsageError("Gram matrix is not PSD within tolerance");
  const double cut = std::max(ev.maxCoeff(), 1.0) * 1e-14;
  for (Eigen::Index i = ev.size() - 1; i >= 0; --i) {
    if (ev(i) <= cut) continue;
    FloatSquare s;
    s.weight = ev(i);
    s.coeffs.assign(es.eigenvectors().col(i).data(), es.eigenvectors().col(i).data() + ev.size());
    out.push_back(std::move(s));
  }
  return out;
}

Eigen::MatrixXd to_double(const Matrix<Rational>& m) {
  MatrixXd out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).get_d();
  }
  return out;
}

Rational exact_from_double(double x) {
  if (!std::isfinite(x)) throw DomainError("non-finite value");
  return Rational(x);
}

Matrix<Rational> to_exact(const Eigen::MatrixXd& m) {
  Matrix<Rational> out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()), Rational(0));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = exact_from_double(m(i, j));
    }
  }
  return out;
}

}  // namespace rrl
