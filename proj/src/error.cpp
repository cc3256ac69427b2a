#include "segcalc/error.hpp"

namespace segcalc {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownLine: return "UnknownLine";
    case ErrorCode::BadExponentOffset: return "BadExponentOffset";
    case ErrorCode::BrokenPairing: return "BrokenPairing";
    case ErrorCode::CuspredOnNonSelfDualLine: return "CuspredOnNonSelfDualLine";
    case ErrorCode::MultipleReducibilityOrbits: return "MultipleReducibilityOrbits";
    case ErrorCode::InvalidSegment: return "InvalidSegment";
    case ErrorCode::NotCombinable: return "NotCombinable";
    case ErrorCode::NotLinked: return "NotLinked";
    case ErrorCode::UnsupportedLabel: return "UnsupportedLabel";
    case ErrorCode::MixedLines: return "MixedLines";
    case ErrorCode::ExplicitlyTooLarge: return "ExplicitlyTooLarge";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::ClassificationGap: return "ClassificationGap";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::MissingSocleHint: return "MissingSocleHint";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
  }
  return "Error";
}

}  // namespace segcalc
