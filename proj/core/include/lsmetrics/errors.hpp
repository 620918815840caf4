#pragma once

#include <stdexcept>
#include <string>

namespace lsm {

/// Base class for all lsmetrics errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed file magic, header, or payload.
class FormatError : public Error {
public:
  using Error::Error;
};

/// Filesystem-level failure (open, read, write).
class IoError : public Error {
public:
  using Error::Error;
};

/// Data fails a structural invariant (non-finite values, bad row sums, ...).
class ValidationError : public Error {
public:
  using Error::Error;
};

/// Incompatible shapes (dimension or class-count mismatch).
class ShapeError : public Error {
public:
  using Error::Error;
};

/// Input too small or otherwise degenerate for the requested computation.
class DegenerateInputError : public Error {
public:
  using Error::Error;
};

/// A documented metric constraint is violated (e.g. |R| != |G|).
class ConstraintError : public Error {
public:
  using Error::Error;
};

/// Out-of-range or invalid parameter value.
class ParameterError : public Error {
public:
  using Error::Error;
};

/// Numerical failure beyond clamp tolerances (e.g. non-PSD covariance).
class NumericalError : public Error {
public:
  using Error::Error;
};

}  // namespace lsm
