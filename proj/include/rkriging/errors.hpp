#pragma once

#include <stdexcept>
#include <string>

namespace rkriging {

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatchError : Error {
  using Error::Error;
};

struct InvalidArgumentError : Error {
  using Error::Error;
};

/// Cholesky-type factorization failed; the matrix is numerically indefinite.
/// Typically signals length-scales that are too large or near-duplicate
/// design points; increase the nugget or reject the candidate.
struct NotPositiveDefiniteError : Error {
  using Error::Error;
};

struct NonConvergenceError : Error {
  using Error::Error;
};

/// An entrywise-positive matrix/vector was expected (Perron setting).
struct NegativeEntryError : Error {
  using Error::Error;
};

struct InsufficientDataError : Error {
  using Error::Error;
};

/// r(x)'c fell below the guard threshold; the query point is too far from
/// the data for the chosen correlation function.
struct DegenerateScaleError : Error {
  using Error::Error;
};

struct DegenerateDenominatorError : Error {
  using Error::Error;
};

struct ZeroWeightError : Error {
  using Error::Error;
};

struct RankDeficientBasisError : Error {
  using Error::Error;
};

struct OptimizerFailureError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

/// Model file has a missing or unsupported format version.
struct VersionError : Error {
  using Error::Error;
};

struct InternalError : Error {
  using Error::Error;
};

}  // namespace rkriging
