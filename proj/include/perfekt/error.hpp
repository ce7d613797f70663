#pragma once

#include <stdexcept>
#include <string>

namespace perfekt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input (text scalars, JSON documents, flags).
class InputError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedDimension : public Error {
 public:
  using Error::Error;
};

/// Two different quadratic fields met in one computation.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// The enumeration box would exceed the configured per-coordinate cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// Margin zero with an irrational isotropic direction: generic enumeration
/// cannot decide the minimum.
class BoundaryUnsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace perfekt
