#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace segcalc {

enum class ErrorCode {
  UnknownLine,
  BadExponentOffset,
  BrokenPairing,
  CuspredOnNonSelfDualLine,
  MultipleReducibilityOrbits,
  InvalidSegment,
  NotCombinable,
  NotLinked,
  UnsupportedLabel,
  MixedLines,
  ExplicitlyTooLarge,
  PreconditionViolated,
  ClassificationGap,
  InvariantViolation,
  MissingSocleHint,
  SyntaxError,
  ConfigError,
  UnknownSuite,
};

std::string_view error_code_name(ErrorCode code);

// All engine failures are reported through this type; `code()` lets callers
// (and the CLI's exit-code mapping) dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(int line, int column, const std::string& what)
      : Error(ErrorCode::SyntaxError,
              "line " + std::to_string(line) + ", col " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace segcalc
