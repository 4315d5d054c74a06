#pragma once

#include <cmath>

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include "rkriging/errors.hpp"
#include "rkriging/kernels.hpp"

namespace rkriging {

/// Cholesky factorization of a symmetric positive-definite matrix.
/// Immutable after construction; all solves and the log-determinant go
/// through this one factor so no inverse is ever formed explicitly.
class SpdFactor {
 public:
  explicit SpdFactor(const Matrix& A) : n_(static_cast<int>(A.rows())) {
    if (A.rows() != A.cols() || A.rows() < 1)
      throw DimensionMismatchError("spd_factor: matrix must be square, n >= 1");
    const double scale = A.cwiseAbs().maxCoeff();
    if ((A - A.transpose()).cwiseAbs().maxCoeff() > 1e-8 * std::max(scale, 1.0))
      throw InvalidArgumentError("spd_factor: matrix is not symmetric");
    llt_.compute(A);
    if (llt_.info() != Eigen::Success)
      throw NotPositiveDefiniteError("spd_factor: matrix is not positive definite");
    // Eigen's LLT can report success with a zero pivot in degenerate cases.
    if (llt_.matrixLLT().diagonal().minCoeff() <= 0.0)
      throw NotPositiveDefiniteError("spd_factor: nonpositive Cholesky pivot");
  }

  int size() const { return n_; }

  Matrix lower() const { return llt_.matrixL(); }

  Vector solve(const Vector& b) const {
    if (b.size() != n_) throw DimensionMismatchError("spd_solve: right-hand side size mismatch");
    return llt_.solve(b);
  }

  Matrix solve(const Matrix& B) const {
    if (B.rows() != n_) throw DimensionMismatchError("spd_solve: right-hand side rows mismatch");
    return llt_.solve(B);
  }

  /// log|A| = 2 sum_i log L_ii.
  double log_det() const {
    return 2.0 * llt_.matrixLLT().diagonal().array().log().sum();
  }

 private:
  Eigen::LLT<Matrix> llt_;
  int n_;
};

inline SpdFactor spd_factor(const Matrix& A) { return SpdFactor(A); }

inline Vector spd_solve(const SpdFactor& F, const Vector& b) { return F.solve(b); }
inline Matrix spd_solve(const SpdFactor& F, const Matrix& B) { return F.solve(B); }

inline double log_det(const SpdFactor& F) { return F.log_det(); }

/// Dominant eigenpair of an entrywise-positive SPD matrix. The eigenvector
/// is the Perron vector: unit l2 norm, all entries positive.
struct EigenPair {
  double lambda1 = 0.0;
  Vector e1;
};

/// Power iteration from the all-ones start vector. Terminates when
/// successive iterates agree to 1e-12 in the infinity norm; with a top
/// eigenvalue of multiplicity > 1 the all-ones start deterministically
/// selects the projection of 1 onto the top eigenspace.
inline EigenPair dominant_eigenpair(const Matrix& R, int max_iter = 10000, double tol = 1e-12) {
  const Eigen::Index n = R.rows();
  if (R.cols() != n || n < 1) throw DimensionMismatchError("dominant_eigenpair: square matrix required");
  if (R.minCoeff() <= 0.0)
    throw NegativeEntryError("dominant_eigenpair: matrix must be entrywise positive");

  Vector v = Vector::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
  bool converged = false;
  for (int k = 0; k < max_iter; ++k) {
    Vector w = R * v;
    const double norm = w.norm();
    if (!(norm > 0.0) || !std::isfinite(norm))
      throw InternalError("dominant_eigenpair: iterate collapsed");
    w /= norm;
    if ((w - v).cwiseAbs().maxCoeff() < tol) {
      v = w;
      converged = true;
      break;
    }
    v = w;
  }
  const double lambda = v.dot(R * v);
  if (!converged) {
    // Accept the exhausted iterate only if it already meets the residual
    // contract; otherwise the top eigenvalues are too close to separate.
    const double resid = (R * v - lambda * v).cwiseAbs().maxCoeff();
    if (resid > 1e-8 * std::max(1.0, lambda))
      throw NonConvergenceError("dominant_eigenpair: power iteration did not converge (near-degenerate top eigenvalues)");
  }

  const double min_entry = v.minCoeff();
  if (min_entry < -1e-12)
    throw NegativeEntryError("dominant_eigenpair: eigenvector has a negative entry beyond round-off");
  if (min_entry < 0.0) {
    v = v.cwiseMax(0.0);
    v /= v.norm();
  }
  return {lambda, v};
}

}  // namespace rkriging
