#pragma once

// Scenario files: one YAML document per experiment. Field names, units and
// the accepted alternatives are documented in docs/scenario-format.md.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <yaml-cpp/yaml.h>

#include "phonograd/baselines.hpp"
#include "phonograd/coherence.hpp"
#include "phonograd/condensate.hpp"
#include "phonograd/gravity_trap.hpp"
#include "phonograd/metrology.hpp"
#include "phonograd/modes.hpp"

namespace phonograd {

enum class ModeSelection { kSingle, kPair };

struct ModeSpec {
  ModeSelection selection = ModeSelection::kSingle;
  int l = 3;
  ModeBranch branch = ModeBranch::kMaxM;  // ignored for kPair

  friend bool operator==(const ModeSpec&, const ModeSpec&) = default;
};

/// Reference interferometers run by `compare`.
struct BaselineSpec {
  FreeFallSetup free_fall;
  TrappedSetup trapped;

  friend bool operator==(const BaselineSpec&, const BaselineSpec&) = default;
};

struct Scenario {
  std::string name;
  GravitySource source;
  TrapConfig trap;
  CondensateSpec condensate;
  ModeSpec mode;
  MetrologyScheme scheme;
  Time t_requested{100.0};
  std::int64_t n_rep = 1;
  std::optional<Length> baseline_length;  // defaults to 2 R_tf
  BudgetOptions budget;
  BaselineSpec baselines;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

YAML::Node to_yaml(const Scenario& scenario);

/// Throws kUnknownKey for unrecognised keys (with the dotted path),
/// kInvalidInput for missing or malformed values.
Scenario scenario_from_yaml(const YAML::Node& root);

/// Canonical YAML with unit comments; parse(serialize(s)) == s.
std::string serialize(const Scenario& scenario);

/// Throws kParseError on YAML syntax errors.
Scenario parse_scenario(std::string_view text);
YAML::Node parse_yaml(std::string_view text);
Scenario load_scenario(const std::filesystem::path& path);

/// Sets a dotted path ("condensate.N_a=1e8") in a scenario document. The
/// value is parsed as a YAML scalar or flow collection.
void apply_override(YAML::Node& root, std::string_view assignment);
void set_path(YAML::Node& root, std::string_view dotted_path, const YAML::Node& value);

Scenario with_overrides(const Scenario& base, const std::vector<std::string>& assignments);

/// Built-in scenarios reproducing the worked examples: 87Rb, omega0 = 2 pi 0.2 Hz,
/// l = 3, N_rep = 1e4, t = 100 s, T = 0.1 nK.
struct PresetInfo {
  std::string name;
  std::string description;
};

std::vector<PresetInfo> preset_catalog();
Scenario preset(std::string_view name);  // throws kUnknownPreset

/// Preset name if one matches, otherwise a scenario file path.
Scenario resolve_scenario(std::string_view file_or_preset);

/// Unit label of a sweepable scalar path, e.g. "source.R" -> "m".
struct AxisInfo {
  std::string path;
  std::string unit;
};

const std::vector<AxisInfo>& sweepable_axes();
std::optional<AxisInfo> find_axis(std::string_view path);

}  // namespace phonograd
