#include "phonograd/error.hpp"

namespace phonograd {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidQuantity: return "InvalidQuantity";
    case ErrorCode::kUnknownSpecies: return "UnknownSpecies";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kUnknownKey: return "UnknownKey";
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kUnknownPreset: return "UnknownPreset";
    case ErrorCode::kInvalidAxis: return "InvalidAxis";
    case ErrorCode::kSingularGeometry: return "SingularGeometry";
    case ErrorCode::kInvalidSource: return "InvalidSource";
    case ErrorCode::kTrapUnstable: return "TrapUnstable";
    case ErrorCode::kInvalidMode: return "InvalidMode";
    case ErrorCode::kIncompleteScheme: return "IncompleteScheme";
    case ErrorCode::kInconsistentScheme: return "InconsistentScheme";
    case ErrorCode::kOutsideAsymptoticRegime: return "OutsideAsymptoticRegime";
    case ErrorCode::kGradientBlindMode: return "GradientBlindMode";
    case ErrorCode::kZeroGradient: return "ZeroGradient";
    case ErrorCode::kSetupTooSmall: return "SetupTooSmall";
    case ErrorCode::kSplitTooLarge: return "SplitTooLarge";
    case ErrorCode::kMixedGradient: return "MixedGradient";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidQuantity:
    case ErrorCode::kUnknownSpecies:
    case ErrorCode::kParseError:
    case ErrorCode::kUnknownKey:
    case ErrorCode::kInvalidInput:
    case ErrorCode::kUnknownPreset:
    case ErrorCode::kInvalidAxis:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

Error Error::with_stage(std::string stage) const {
  Error e = *this;
  e.stage_ = std::move(stage);
  return e;
}

}  // namespace phonograd
