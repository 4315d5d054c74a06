#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

#include <Eigen/Core>

#include "rkriging/errors.hpp"
#include "rkriging/kernels.hpp"

namespace rkriging {

using Objective = std::function<double(const Vector&)>;

struct NelderMeadOptions {
  int max_evals = 500;
  double f_tol = 1e-10;        // stop when the simplex f-spread falls below this
  double x_tol = 1e-9;         // or when the vertex spread does
  double initial_step = 0.25;  // per-coordinate offset used to seed the simplex
};

struct OptimResult {
  Vector x;
  double f = std::numeric_limits<double>::infinity();
  int evals = 0;
};

/// Nelder-Mead simplex search on a box. Candidate points are projected onto
/// [lo, hi] componentwise; the objective may return +inf to mark a candidate
/// infeasible. Deterministic given the start point.
inline OptimResult nelder_mead_box(const Objective& f, const Vector& x0, const Vector& lo,
                                   const Vector& hi, const NelderMeadOptions& opts = {}) {
  const int d = static_cast<int>(x0.size());
  if (lo.size() != d || hi.size() != d)
    throw DimensionMismatchError("nelder_mead_box: bounds dimension mismatch");
  for (int i = 0; i < d; ++i)
    if (!(lo[i] < hi[i])) throw InvalidArgumentError("nelder_mead_box: need lo < hi");

  const auto clamp = [&](Vector x) {
    for (int i = 0; i < d; ++i) x[i] = std::clamp(x[i], lo[i], hi[i]);
    return x;
  };

  int evals = 0;
  const auto eval = [&](const Vector& x) {
    ++evals;
    const double v = f(x);
    return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
  };

  // Initial simplex: x0 plus one offset vertex per coordinate.
  std::vector<Vector> xs;
  std::vector<double> fs;
  xs.push_back(clamp(x0));
  fs.push_back(eval(xs[0]));
  for (int i = 0; i < d; ++i) {
    Vector v = xs[0];
    const double step = opts.initial_step * (hi[i] - lo[i]) / 4.0;
    v[i] = (v[i] + step <= hi[i]) ? v[i] + step : v[i] - step;
    xs.push_back(clamp(v));
    fs.push_back(eval(xs.back()));
  }

  std::vector<int> order(d + 1);
  const auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return fs[a] < fs[b]; });
  };

  constexpr double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;
  while (evals < opts.max_evals) {
    sort_simplex();
    const int best = order[0], worst = order[d], second_worst = order[d - 1];

    double fspread = fs[worst] - fs[best];
    double xspread = 0.0;
    for (int i = 1; i <= d; ++i)
      xspread = std::max(xspread, (xs[order[i]] - xs[best]).cwiseAbs().maxCoeff());
    if (std::isfinite(fs[worst]) && (fspread <= opts.f_tol * (1.0 + std::abs(fs[best])) || xspread <= opts.x_tol))
      break;

    Vector centroid = Vector::Zero(d);
    for (int i = 0; i <= d; ++i)
      if (i != worst) centroid += xs[i];
    centroid /= d;

    const Vector xr = clamp(centroid + alpha * (centroid - xs[worst]));
    const double fr = eval(xr);

    if (fr < fs[best]) {
      const Vector xe = clamp(centroid + gamma * (xr - centroid));
      const double fe = eval(xe);
      if (fe < fr) {
        xs[worst] = xe;
        fs[worst] = fe;
      } else {
        xs[worst] = xr;
        fs[worst] = fr;
      }
    } else if (fr < fs[second_worst]) {
      xs[worst] = xr;
      fs[worst] = fr;
    } else {
      const bool outside = fr < fs[worst];
      const Vector xc = clamp(centroid + rho * ((outside ? xr : xs[worst]) - centroid));
      const double fc = eval(xc);
      if (fc < (outside ? fr : fs[worst])) {
        xs[worst] = xc;
        fs[worst] = fc;
      } else {
        // shrink toward the best vertex
        for (int i = 0; i <= d; ++i) {
          if (i == best) continue;
          xs[i] = clamp(xs[best] + sigma * (xs[i] - xs[best]));
          fs[i] = eval(xs[i]);
          if (evals >= opts.max_evals) break;
        }
      }
    }
  }

  sort_simplex();
  return {xs[order[0]], fs[order[0]], evals};
}

/// Halton low-discrepancy sequence, one prime base per dimension.
inline double halton_radical_inverse(std::uint64_t index, int base) {
  double result = 0.0, f = 1.0;
  while (index > 0) {
    f /= base;
    result += f * static_cast<double>(index % base);
    index /= base;
  }
  return result;
}

inline Vector halton_point(std::uint64_t index, int dim) {
  static constexpr int primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                   37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79};
  if (dim > static_cast<int>(std::size(primes)))
    throw InvalidArgumentError("halton_point: dimension too large");
  Vector x(dim);
  for (int i = 0; i < dim; ++i) x[i] = halton_radical_inverse(index, primes[i]);
  return x;
}

/// Multi-start Nelder-Mead on a box: one run from `center`, the remaining
/// starts from a Halton draw whose starting index is derived from `seed`.
inline OptimResult multistart_nelder_mead(const Objective& f, const Vector& center,
                                          const Vector& lo, const Vector& hi, int n_starts,
                                          std::uint64_t seed, const NelderMeadOptions& opts = {}) {
  const int d = static_cast<int>(center.size());
  OptimResult best;
  bool any_finite = false;
  for (int s = 0; s < n_starts; ++s) {
    Vector x0;
    if (s == 0) {
      x0 = center;
    } else {
      const std::uint64_t index = 1 + (seed % 4096) + static_cast<std::uint64_t>(s);
      const Vector u = halton_point(index, d);
      x0 = lo + u.cwiseProduct(hi - lo);
    }
    OptimResult r = nelder_mead_box(f, x0, lo, hi, opts);
    if (std::isfinite(r.f) && (!any_finite || r.f < best.f)) {
      best = std::move(r);
      any_finite = true;
    }
  }
  if (!any_finite)
    throw OptimizerFailureError("multistart_nelder_mead: every start failed to produce a finite objective");
  return best;
}

}  // namespace rkriging
