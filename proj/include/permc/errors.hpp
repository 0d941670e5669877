#pragma once

#include <stdexcept>
#include <string>

namespace permc {

enum class ErrorCode {
  MalformedSpec,
  NotMarked,
  NoFixedPoint,
  LengthCapExceeded,
  LookaheadCapExceeded,
  NotCircular,
  NotAFactor,
  TooShort,
  StabilizationCapExceeded,
  LengthMismatch,
  DegenerateBoundary,
  ArithmeticOverflow,
  UnknownSeed,
  NegativeResult,
  InvariantViolation,
};

/// All library failures are reported as Error with a code that the CLI maps
/// to an exit status. Messages are human-readable diagnostics, not data.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::MalformedSpec: return "MalformedSpec";
    case ErrorCode::NotMarked: return "NotMarked";
    case ErrorCode::NoFixedPoint: return "NoFixedPoint";
    case ErrorCode::LengthCapExceeded: return "LengthCapExceeded";
    case ErrorCode::LookaheadCapExceeded: return "LookaheadCapExceeded";
    case ErrorCode::NotCircular: return "NotCircular";
    case ErrorCode::NotAFactor: return "NotAFactor";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::StabilizationCapExceeded: return "StabilizationCapExceeded";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DegenerateBoundary: return "DegenerateBoundary";
    case ErrorCode::ArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorCode::UnknownSeed: return "UnknownSeed";
    case ErrorCode::NegativeResult: return "NegativeResult";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace permc
