#pragma once

#include <stdexcept>
#include <string>

namespace sbraid {

/// Base class for every error raised by the library. The CLI maps all of
/// these to exit status 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class StrandMismatch : public Error {
 public:
  StrandMismatch(int lhs, int rhs)
      : Error("strand count mismatch: " + std::to_string(lhs) + " vs " +
              std::to_string(rhs)) {}
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Raised when an operation requires a pure (identity permutation) input.
class NotPure : public Error {
 public:
  using Error::Error;
};

/// Input the algorithms are not defined on, e.g. a singular letter with
/// negative exponent, or an η comparison beyond two singularities.
class UnsupportedInput : public Error {
 public:
  using Error::Error;
};

/// An internal self-check failed. Never swallowed.
class CertificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace sbraid
