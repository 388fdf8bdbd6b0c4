#pragma once

#include <stdexcept>

namespace csnd {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical hypothesis of the requested operation does not hold for
/// the input, e.g. asking for a quadratic embedding of a kernel that is not
/// conditionally negative definite.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent input: unknown labels, asymmetric matrices,
/// out-of-range parameters, unreadable files.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A floating-point identification or consistency check failed, so the
/// result cannot be trusted at the requested precision.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace csnd
