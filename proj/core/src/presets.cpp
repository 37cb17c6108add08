#include <array>

#include "phonograd/error.hpp"
#include "phonograd/scenario.hpp"

namespace phonograd {

namespace {

struct PresetDef {
  const char* name;
  const char* description;
  bool sphere;
  double atom_number;
  double squeezed_number;
};

constexpr std::array<PresetDef, 4> kPresets{{
    {"earth-1e6", "Earth as a point mass, N_a = 1e6, N_r = 1e3", false, 1e6, 1e3},
    {"earth-1e8", "Earth as a point mass, N_a = 1e8, N_r = 1e4", false, 1e8, 1e4},
    {"sphere20mg-1e6", "20 mg sphere at 1 mm, N_a = 1e6, N_r = 1e3", true, 1e6, 1e3},
    {"sphere20mg-1e8", "20 mg sphere at 1 mm, N_a = 1e8, N_r = 1e4", true, 1e8, 1e4},
}};

Scenario build(const PresetDef& def) {
  Scenario s;
  s.name = def.name;
  // Gold-density sphere of 20 mg has a radius of about 0.63 mm.
  s.source = def.sphere ? GravitySource::sphere(Mass{2e-5}, Length{1e-3}, Length{6.3e-4}) : GravitySource::earth();
  s.trap = TrapConfig{from_hz(0.2)};
  s.condensate = CondensateSpec{rubidium87(), def.atom_number, Temperature{1e-10}};
  s.mode = ModeSpec{ModeSelection::kSingle, 3, ModeBranch::kMaxM};
  s.scheme = MetrologyScheme::single_mode(def.squeezed_number);
  s.t_requested = Time{100.0};
  s.n_rep = 10000;
  return s;
}

}  // namespace

std::vector<PresetInfo> preset_catalog() {
  std::vector<PresetInfo> out;
  for (const auto& p : kPresets) out.push_back({p.name, p.description});
  return out;
}

Scenario preset(std::string_view name) {
  for (const auto& p : kPresets) {
    if (name == p.name) return build(p);
  }
  throw Error(ErrorCode::kUnknownPreset, "unknown preset '" + std::string(name) + "'");
}

}  // namespace phonograd
