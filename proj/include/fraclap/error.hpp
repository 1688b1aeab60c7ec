#pragma once

#include <stdexcept>
#include <string>

namespace fraclap {

// Base class for every error the library raises. Callers that only care
// about "something went wrong numerically" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid input: parameter out of range, malformed list, bad config field.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of a formula is not met, e.g. the integrability
// gates of the power-function images or the Laplace kernels.
class ConditionError : public Error {
 public:
  using Error::Error;
};

// Argument hits a Gamma pole (nonpositive integer within tolerance).
class PoleError : public Error {
 public:
  using Error::Error;
};

// Argument lies outside the region where a series or integral converges.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Iteration or quadrature hit its cap without meeting the stopping rule.
class NonConvergenceError : public Error {
 public:
  using Error::Error;
};

// Exact integer result does not fit the return type.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Values fell below the representable range needed by a fit.
class UnderflowError : public Error {
 public:
  using Error::Error;
};

// Parameter-list shape does not match what an operation requires.
class ShapeError : public Error {
 public:
  using Error::Error;
};

}  // namespace fraclap
