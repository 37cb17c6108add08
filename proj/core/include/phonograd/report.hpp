#pragma once

#include <optional>
#include <string>
#include <vector>

#include "phonograd/baselines.hpp"
#include "phonograd/coherence.hpp"
#include "phonograd/condensate.hpp"
#include "phonograd/gravity_trap.hpp"
#include "phonograd/metrology.hpp"
#include "phonograd/modes.hpp"
#include "phonograd/scenario.hpp"

namespace phonograd {

struct Warning {
  std::string code;
  std::string message;

  friend bool operator==(const Warning&, const Warning&) = default;
};

struct SensitivityReport {
  Scenario scenario;
  PerturbedTrap trap;
  Energy constant_offset;
  CondensateProfile profile;
  TfValidity validity = TfValidity::kValid;
  PhononMode mode;                // the probed mode (kMaxM member for pairs)
  std::optional<ModePair> pair;   // set for ModeSelection::kPair
  CoherenceBudget budget;
  ErrorBound bound;
  ForceEquivalent force;
  std::vector<Warning> warnings;  // each distinct warning once, in pipeline order
};

/// Trap -> profile -> modes -> time budget -> QCRB -> force equivalents.
/// Errors are rethrown with the failing stage attached.
SensitivityReport run_report(const Scenario& scenario);

struct ScenarioComparison {
  SensitivityReport report;
  FreeFallBaseline free_fall;
  TrappedBaseline trapped;
  ComparisonTable table;
};

/// Phononic bound next to the free-fall and trapped matter-wave baselines,
/// all at the scenario's gradient, atom number and squeezed number.
ScenarioComparison run_comparison(const Scenario& scenario);

}  // namespace phonograd
