#pragma once

#include <cmath>
#include <string>

#include <Eigen/Core>

#include "rkriging/errors.hpp"

namespace rkriging {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

enum class CorrFamily { gaussian, rational_quadratic, matern32, exponential };

inline std::string to_string(CorrFamily family) {
  switch (family) {
    case CorrFamily::gaussian: return "gaussian";
    case CorrFamily::rational_quadratic: return "rq";
    case CorrFamily::matern32: return "matern32";
    case CorrFamily::exponential: return "exp";
  }
  throw InternalError("unknown correlation family");
}

inline CorrFamily corr_family_from_string(const std::string& name) {
  if (name == "gaussian") return CorrFamily::gaussian;
  if (name == "rq" || name == "rational_quadratic") return CorrFamily::rational_quadratic;
  if (name == "matern32") return CorrFamily::matern32;
  if (name == "exp" || name == "exponential") return CorrFamily::exponential;
  throw InvalidArgumentError("unknown correlation family: " + name);
}

/// Stationary correlation-function family with per-dimension length-scales
/// and a diagonal nugget. All families satisfy R(0) = 1 and R(h) > 0.
struct KernelSpec {
  CorrFamily family = CorrFamily::gaussian;
  Vector lengthscales;    // theta_i > 0, one per input dimension
  double nugget = 1e-6;   // added to the diagonal of the correlation matrix

  KernelSpec() = default;

  KernelSpec(CorrFamily family_, Vector lengthscales_, double nugget_ = 1e-6)
      : family(family_), lengthscales(std::move(lengthscales_)), nugget(nugget_) {
    validate();
  }

  /// Isotropic constructor: the same theta in every dimension.
  KernelSpec(CorrFamily family_, int dim, double theta, double nugget_ = 1e-6)
      : KernelSpec(family_, Vector::Constant(dim, theta), nugget_) {}

  int dim() const { return static_cast<int>(lengthscales.size()); }

  void validate() const {
    if (lengthscales.size() == 0) throw InvalidArgumentError("KernelSpec: empty lengthscales");
    for (Eigen::Index i = 0; i < lengthscales.size(); ++i) {
      if (!(lengthscales[i] > 0.0) || !std::isfinite(lengthscales[i]))
        throw InvalidArgumentError("KernelSpec: lengthscales must be strictly positive and finite");
    }
    if (!(nugget >= 0.0) || nugget > 1e-2)
      throw InvalidArgumentError("KernelSpec: nugget must lie in [0, 1e-2]");
  }
};

/// Design matrix X (n x p, coordinates in the unit cube) with responses y.
struct DataSet {
  Matrix X;
  Vector y;

  DataSet() = default;

  DataSet(Matrix X_, Vector y_) : X(std::move(X_)), y(std::move(y_)) { validate(); }

  int n() const { return static_cast<int>(X.rows()); }
  int dim() const { return static_cast<int>(X.cols()); }

  void validate() const {
    if (X.rows() < 1 || X.cols() < 1) throw InvalidArgumentError("DataSet: need n >= 1 and p >= 1");
    if (y.size() != X.rows()) throw DimensionMismatchError("DataSet: y length must equal rows of X");
    if (!X.allFinite() || !y.allFinite()) throw InvalidArgumentError("DataSet: non-finite entries");
    if (X.minCoeff() < -1e-9 || X.maxCoeff() > 1.0 + 1e-9)
      throw InvalidArgumentError("DataSet: coordinates must be pre-scaled to [0,1]");
    for (Eigen::Index i = 0; i < X.rows(); ++i)
      for (Eigen::Index j = i + 1; j < X.rows(); ++j)
        if ((X.row(i) - X.row(j)).cwiseAbs().maxCoeff() == 0.0)
          throw InvalidArgumentError("DataSet: duplicated design points (rows " +
                                     std::to_string(i) + ", " + std::to_string(j) + ")");
  }
};

namespace detail {

inline void check_pair(const KernelSpec& spec, const Vector& u, const Vector& v) {
  if (u.size() != v.size() || u.size() != spec.lengthscales.size())
    throw DimensionMismatchError("corr: point dimension does not match KernelSpec");
  if (!u.allFinite() || !v.allFinite()) throw InvalidArgumentError("corr: non-finite input point");
}

}  // namespace detail

/// log R(u - v). Exact at u = v (returns 0) and safe in the far tail where
/// the correlation itself underflows.
inline double log_corr(const KernelSpec& spec, const Vector& u, const Vector& v) {
  detail::check_pair(spec, u, v);
  const Vector& th = spec.lengthscales;
  switch (spec.family) {
    case CorrFamily::gaussian: {
      double s = 0.0;
      for (Eigen::Index i = 0; i < u.size(); ++i) {
        const double z = (u[i] - v[i]) / th[i];
        s += z * z;
      }
      return -s;
    }
    case CorrFamily::rational_quadratic: {
      double s = 0.0;
      for (Eigen::Index i = 0; i < u.size(); ++i) {
        const double z = (u[i] - v[i]) / th[i];
        s += z * z;
      }
      return -std::log1p(s);
    }
    case CorrFamily::matern32: {
      // product over dimensions of (1 + sqrt(3)|h|/theta) exp(-sqrt(3)|h|/theta)
      constexpr double sqrt3 = 1.7320508075688772;
      double acc = 0.0;
      for (Eigen::Index i = 0; i < u.size(); ++i) {
        const double z = sqrt3 * std::abs(u[i] - v[i]) / th[i];
        acc += std::log1p(z) - z;
      }
      return acc;
    }
    case CorrFamily::exponential: {
      double s = 0.0;
      for (Eigen::Index i = 0; i < u.size(); ++i) s += std::abs(u[i] - v[i]) / th[i];
      return -s;
    }
  }
  throw InternalError("unknown correlation family");
}

/// R(u - v) in (0, 1]; symmetric in (u, v), equal to 1 at u = v.
inline double corr(const KernelSpec& spec, const Vector& u, const Vector& v) {
  return std::exp(log_corr(spec, u, v));
}

/// n x n correlation matrix with the nugget added to the diagonal.
inline Matrix corr_matrix(const KernelSpec& spec, const Matrix& X) {
  if (X.cols() != spec.lengthscales.size())
    throw DimensionMismatchError("corr_matrix: design dimension does not match KernelSpec");
  const Eigen::Index n = X.rows();
  Matrix R(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    R(i, i) = 1.0 + spec.nugget;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double rij = corr(spec, X.row(i).transpose(), X.row(j).transpose());
      R(i, j) = rij;
      R(j, i) = rij;
    }
  }
  return R;
}

/// Cross-correlation vector r(x): r_i = R(x - x_i). No nugget is applied.
inline Vector cross_corr(const KernelSpec& spec, const Matrix& X, const Vector& x) {
  if (X.cols() != x.size()) throw DimensionMismatchError("cross_corr: point dimension mismatch");
  Vector r(X.rows());
  for (Eigen::Index i = 0; i < X.rows(); ++i) r[i] = corr(spec, x, X.row(i).transpose());
  return r;
}

/// log r(x), elementwise. Used by the rational predictors, whose value is a
/// ratio invariant to rescaling r(x): factoring out max_i log r_i keeps the
/// arithmetic finite even where every r_i underflows.
inline Vector log_cross_corr(const KernelSpec& spec, const Matrix& X, const Vector& x) {
  if (X.cols() != x.size()) throw DimensionMismatchError("log_cross_corr: point dimension mismatch");
  Vector lr(X.rows());
  for (Eigen::Index i = 0; i < X.rows(); ++i) lr[i] = log_corr(spec, x, X.row(i).transpose());
  return lr;
}

}  // namespace rkriging
