#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace cis {

enum class ErrorCode {
  InvalidInput,
  NumericFailure,
  Pole,
  SolverDiverged,
  NotConverged,
};

const char* to_string(ErrorCode code);

/// Exception carrying one of the library error codes.
///
/// NumericFailure raised on exponent overflow attaches the offending
/// log-modulus so callers can keep working in the log domain.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::optional<double> log_value = std::nullopt)
      : std::runtime_error(what), code_(code), log_value_(log_value) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<double> log_value() const noexcept { return log_value_; }

 private:
  ErrorCode code_;
  std::optional<double> log_value_;
};

[[noreturn]] inline void invalid_input(const std::string& what) {
  throw Error(ErrorCode::InvalidInput, what);
}

[[noreturn]] inline void numeric_failure(const std::string& what) {
  throw Error(ErrorCode::NumericFailure, what);
}

}  // namespace cis
