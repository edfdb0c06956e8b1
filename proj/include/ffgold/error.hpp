#pragma once

#include <stdexcept>
#include <string>

namespace ffgold {

enum class ErrorKind {
  InvalidArgument,
  InvalidSpec,
  SingularCurve,
  WeilViolation,
  FunctionalEquationViolation,
  BudgetExceeded,
  DepthExceeded,
  DomainError,
  ToleranceUnreachable,
  PoleAtNonPositiveInteger,
  NearPole,
  NearZeroOfLogDeriv,
  QuadratureNotConverged,
  RootFindingFailed,
  DegenerateRatio,
};

const char* to_string(ErrorKind kind);

// Numerical failures map to CLI exit code 3, everything else to 2.
bool is_numerical_failure(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ffgold
