#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mooring {

enum class ErrorKind {
  InvalidInput,
  SingularTension,
  NonFiniteState,
  StepUnderflow,
  MaxStepsExceeded,
  NonAxisAligned,
  SingularJacobian,
  NoConvergence,
  EvaluationFailed,
  ZeroHorizontalTension,
  UnsupportedCase,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so
// callers (the CLI, the validation runner) can map it to an outcome.
class SolverError : public std::runtime_error {
 public:
  SolverError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mooring
