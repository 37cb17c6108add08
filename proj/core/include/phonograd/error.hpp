#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace phonograd {

enum class ErrorCode {
  // Input and configuration.
  kInvalidQuantity,
  kUnknownSpecies,
  kParseError,
  kUnknownKey,
  kInvalidInput,
  kUnknownPreset,
  kInvalidAxis,
  // Physics domain.
  kSingularGeometry,
  kInvalidSource,
  kTrapUnstable,
  kInvalidMode,
  kIncompleteScheme,
  kInconsistentScheme,
  kOutsideAsymptoticRegime,
  kGradientBlindMode,
  kZeroGradient,
  kSetupTooSmall,
  kSplitTooLarge,
  kMixedGradient,
};

std::string_view to_string(ErrorCode code);

/// True for errors caused by malformed input rather than by the physics.
bool is_input_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  [[nodiscard]] ErrorCode code() const { return code_; }

  /// Pipeline stage that raised the error, empty outside run_report.
  [[nodiscard]] const std::string& stage() const { return stage_; }

  [[nodiscard]] Error with_stage(std::string stage) const;

 private:
  ErrorCode code_;
  std::string stage_;
};

}  // namespace phonograd
