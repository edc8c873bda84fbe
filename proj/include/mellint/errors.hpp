#pragma once

#include <stdexcept>
#include <string>

namespace mellint {

/// Root of every error this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside an operation's domain (also used for parameters outside
/// an identity's declared range).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation exactly at a singular point, e.g. K at m = 1.
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An iterative method hit its cap before reaching the requested accuracy.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// The integrand threw or produced a non-finite value at a node.
class IntegrandFailure : public Error {
 public:
  using Error::Error;
};

/// A derived relation that is supposed to hold exactly was violated.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace mellint
