#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace numon {

/// Stable error identifiers; the CLI maps each to exit code 1 and prints
/// the identifier verbatim.
enum class ErrorCode {
  EmptyInput,
  InvalidGenerator,
  NotCofinite,
  NotAnElement,
  DimensionMismatch,
  WindowTooSmall,
  ExplosionGuard,
  NotAGluing,
  CatenaryTooSmall,
  NotCoprime,
  NotMinimallyGenerated,
  InvalidTarget,
  BadExplicitB,
  BaseCaseSearchExhausted,
  Overflow,
  CapExceeded,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view code_name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace numon
