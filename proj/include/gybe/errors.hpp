#pragma once

#include <stdexcept>
#include <string>

namespace gybe {

// Base for every error raised by the library. The CLI maps these to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// A construction would produce a matrix larger than dimension_cap().
class DimensionCapExceeded : public Error {
 public:
  using Error::Error;
};

// A sine or linear factor in a coefficient denominator vanished.
class SingularDenominator : public Error {
 public:
  using Error::Error;
};

// Argument outside the domain of a closed formula (e.g. normalization at a = +-1).
class DomainError : public Error {
 public:
  using Error::Error;
};

// (z, N) outside N/2 <= z <= N-1.
class WindowViolation : public Error {
 public:
  using Error::Error;
};

class NotDiagonalSupport : public Error {
 public:
  using Error::Error;
};

class UnsupportedParity : public Error {
 public:
  using Error::Error;
};

}  // namespace gybe
