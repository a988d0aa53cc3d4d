#pragma once

#include <stdexcept>
#include <string>

namespace ebline {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input fails a documented precondition (bad probability, wrong vector length, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Echelon capacity vector increases somewhere (must be non-increasing).
class NonMonotoneCapacities : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A state count exceeds the 64-bit range; reported instead of wrapping.
class Overflow : public Error {
 public:
  using Error::Error;
};

/// An iterative solve exhausted its iteration cap.
class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& what, long iterations, double residual)
      : Error(what), iterations(iterations), residual(residual) {}

  long iterations;
  double residual;
};

/// First-subsystem chain has a downstream rate of zero above the empty level,
/// which would make it permanently blocked there.
class DegenerateDownstream : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A simulator step or chain builder was handed a state outside the feasible set.
class InfeasibleState : public Error {
 public:
  using Error::Error;
};

/// Full-chain construction refused: state space above the configured cap.
class TooLarge : public Error {
 public:
  using Error::Error;
};

/// Stationary solve failed; usually signals a reducible chain (p_n in {0,1}).
class SingularSystem : public Error {
 public:
  using Error::Error;
};

/// A reported stage WIP came out below -1e-6; numerical failure signal.
class NegativeStageWip : public Error {
 public:
  using Error::Error;
};

/// Spec-file parse or validation failure. `line` is 1-based, 0 if unknown.
class SpecParseError : public Error {
 public:
  SpecParseError(const std::string& what, int line = 0) : Error(what), line(line) {}

  int line;
};

}  // namespace ebline
