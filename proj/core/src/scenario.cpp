#include "phonograd/scenario.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "phonograd/error.hpp"

namespace phonograd {

namespace {

std::string number_text(double v) { return fmt::format("{}", v); }

YAML::Node scalar(double v) { return YAML::Node(number_text(v)); }
YAML::Node scalar(std::int64_t v) { return YAML::Node(fmt::format("{}", v)); }
YAML::Node scalar(const std::string& v) { return YAML::Node(v); }

std::string join_path(const std::string& prefix, std::string_view key) {
  return prefix.empty() ? std::string(key) : prefix + "." + std::string(key);
}

// Reads one YAML map, remembering which keys were consumed so that leftovers
// can be reported as unknown.
class MapReader {
 public:
  MapReader(const YAML::Node& node, std::string path) : node_(node), path_(std::move(path)) {
    if (node_ && !node_.IsNull() && !node_.IsMap()) {
      throw Error(ErrorCode::kInvalidInput, "'" + display_path() + "' must be a mapping");
    }
  }

  [[nodiscard]] bool has(std::string_view key) const { return node_ && node_.IsMap() && node_[std::string(key)]; }

  std::optional<YAML::Node> child(std::string_view key) {
    if (!has(key)) return std::nullopt;
    seen_.insert(std::string(key));
    return node_[std::string(key)];
  }

  std::optional<double> number(std::string_view key) {
    auto n = child(key);
    if (!n) return std::nullopt;
    if (!n->IsScalar()) throw Error(ErrorCode::kInvalidInput, "'" + path_of(key) + "' must be a number");
    const std::string& text = n->Scalar();
    double v = 0.0;
    try {
      v = n->as<double>();
    } catch (const YAML::Exception&) {
      throw Error(ErrorCode::kInvalidInput, "'" + path_of(key) + "' must be a number, got '" + text + "'");
    }
    if (!std::isfinite(v)) throw Error(ErrorCode::kInvalidInput, "'" + path_of(key) + "' must be finite");
    return v;
  }

  double required_number(std::string_view key) {
    auto v = number(key);
    if (!v) throw Error(ErrorCode::kInvalidInput, "missing required key '" + path_of(key) + "'");
    return *v;
  }

  std::optional<std::int64_t> integer(std::string_view key) {
    auto v = number(key);
    if (!v) return std::nullopt;
    if (std::floor(*v) != *v || std::fabs(*v) > 9.0e15) {
      throw Error(ErrorCode::kInvalidInput, "'" + path_of(key) + "' must be an integer");
    }
    return static_cast<std::int64_t>(*v);
  }

  std::optional<std::string> text(std::string_view key) {
    auto n = child(key);
    if (!n) return std::nullopt;
    if (!n->IsScalar()) throw Error(ErrorCode::kInvalidInput, "'" + path_of(key) + "' must be a string");
    return n->Scalar();
  }

  std::string required_text(std::string_view key) {
    auto v = text(key);
    if (!v) throw Error(ErrorCode::kInvalidInput, "missing required key '" + path_of(key) + "'");
    return *v;
  }

  std::string path_of(std::string_view key) const { return join_path(path_, key); }

  void finish() const {
    if (!node_ || !node_.IsMap()) return;
    for (const auto& kv : node_) {
      const auto key = kv.first.as<std::string>();
      if (!seen_.contains(key)) throw Error(ErrorCode::kUnknownKey, "unknown key '" + path_of(key) + "'");
    }
  }

 private:
  std::string display_path() const { return path_.empty() ? "<root>" : path_; }

  YAML::Node node_;
  std::string path_;
  std::set<std::string> seen_;
};

MapReader required_section(MapReader& parent, std::string_view key) {
  auto node = parent.child(key);
  if (!node) throw Error(ErrorCode::kInvalidInput, "missing required section '" + parent.path_of(key) + "'");
  return MapReader(*node, parent.path_of(key));
}

template <typename Enum>
Enum parse_enum(const std::string& text, const std::string& path, std::initializer_list<std::pair<const char*, Enum>> options) {
  std::string accepted;
  for (const auto& [name, value] : options) {
    if (text == name) return value;
    if (!accepted.empty()) accepted += ", ";
    accepted += name;
  }
  throw Error(ErrorCode::kInvalidInput, "'" + path + "' must be one of " + accepted + "; got '" + text + "'");
}

GravitySource parse_source(MapReader r) {
  const std::string kind_text = r.required_text("kind");
  const auto kind = parse_enum<SourceKind>(kind_text, r.path_of("kind"),
                                           {{"point", SourceKind::kPointEarth},
                                            {"sphere", SourceKind::kSphere},
                                            {"direct", SourceKind::kDirect}});
  GravitySource s;
  switch (kind) {
    case SourceKind::kPointEarth:
      s = GravitySource::point(Mass{r.required_number("M")}, Length{r.required_number("R")});
      break;
    case SourceKind::kSphere: {
      const Length distance{r.required_number("R")};
      const Length radius{r.required_number("sphere_radius")};
      auto mass = r.number("M");
      auto density = r.number("mass_density");
      if (mass.has_value() == density.has_value()) {
        throw Error(ErrorCode::kInvalidInput, "sphere source needs exactly one of 'source.M', 'source.mass_density'");
      }
      s = mass ? GravitySource::sphere(Mass{*mass}, distance, radius)
               : GravitySource::sphere_from_density(MassDensity{*density}, distance, radius);
      break;
    }
    case SourceKind::kDirect:
      s = GravitySource::direct(GravityGradient{r.required_number("direct_epsilon")});
      break;
  }
  r.finish();
  return s;
}

TrapConfig parse_trap(MapReader r) {
  auto omega = r.number("omega0");
  auto hz = r.number("frequency_hz");
  if (omega.has_value() == hz.has_value()) {
    throw Error(ErrorCode::kInvalidInput, "trap needs exactly one of 'trap.omega0', 'trap.frequency_hz'");
  }
  r.finish();
  return TrapConfig{omega ? AngularFrequency{*omega} : from_hz(*hz)};
}

AtomSpecies parse_species(const YAML::Node& node, const std::string& path) {
  if (node.IsScalar()) return species_lookup(node.Scalar());
  MapReader r(node, path);
  AtomSpecies s{
      .name = r.required_text("name"),
      .mass = Mass{r.required_number("m")},
      .a_scatt = Length{r.required_number("a_scatt")},
      .three_body_D = three_body_from_cgs(r.number("D").value_or(0.0)),
  };
  r.finish();
  validate(s);
  return s;
}

CondensateSpec parse_condensate(MapReader r) {
  auto species_node = r.child("species");
  if (!species_node) throw Error(ErrorCode::kInvalidInput, "missing required key 'condensate.species'");
  CondensateSpec c{
      .species = parse_species(*species_node, r.path_of("species")),
      .atom_number = r.required_number("N_a"),
      .temperature = Temperature{r.number("T").value_or(0.0)},
  };
  r.finish();
  return c;
}

ModeSpec parse_mode(MapReader r) {
  ModeSpec m;
  if (auto kind = r.text("kind")) {
    m.selection = parse_enum<ModeSelection>(*kind, r.path_of("kind"),
                                            {{"single", ModeSelection::kSingle}, {"pair", ModeSelection::kPair}});
  }
  if (auto l = r.integer("l")) {
    if (*l > std::numeric_limits<int>::max() || *l < std::numeric_limits<int>::min())
      throw Error(ErrorCode::kInvalidInput, "'mode.l' out of range");
    m.l = static_cast<int>(*l);
  }
  if (auto branch = r.text("branch")) {
    m.branch = parse_enum<ModeBranch>(*branch, r.path_of("branch"),
                                      {{"max_m", ModeBranch::kMaxM}, {"l_minus_one", ModeBranch::kLMinusOne}});
  }
  // A pair always uses both branches.
  if (m.selection == ModeSelection::kPair) m.branch = ModeBranch::kMaxM;
  r.finish();
  return m;
}

MetrologyScheme parse_scheme(MapReader r) {
  MetrologyScheme s;
  s.kind = parse_enum<SchemeKind>(r.required_text("kind"), r.path_of("kind"),
                                  {{"single_mode_squeezed", SchemeKind::kSingleModeSqueezed},
                                   {"su2", SchemeKind::kSU2},
                                   {"su11", SchemeKind::kSU11},
                                   {"pumped_up_su11", SchemeKind::kPumpedUpSU11}});
  s.squeezed_number = r.number("N_r");
  s.squeezing = r.number("r");
  s.chi = r.number("chi").value_or(0.0);
  s.total_number = r.number("N_bar");
  s.pump_number = r.number("N_alpha");
  r.finish();
  validate(s);
  return s;
}

BudgetOptions parse_budget(MapReader r) {
  BudgetOptions b;
  b.safety_fraction = r.number("safety_fraction").value_or(b.safety_fraction);
  b.damping_prefactor = r.number("damping_prefactor").value_or(b.damping_prefactor);
  r.finish();
  return b;
}

BaselineSpec parse_baselines(MapReader r) {
  BaselineSpec b;
  if (auto ff_node = r.child("free_fall")) {
    MapReader ff(*ff_node, r.path_of("free_fall"));
    auto& f = b.free_fall;
    f.setup_size = Length{ff.number("s").value_or(f.setup_size.value())};
    f.laser_wavelength = Length{ff.number("lambda_laser").value_or(f.laser_wavelength.value())};
    if (auto c = ff.text("convention")) {
      f.convention = parse_enum<KickConvention>(
          *c, ff.path_of("convention"),
          {{"single_photon", KickConvention::kSinglePhoton}, {"two_photon", KickConvention::kTwoPhoton}});
    }
    if (auto n = ff.integer("n_kick")) f.n_kick_override = static_cast<int>(*n);
    if (auto t = ff.number("t_free")) f.t_free_override = Time{*t};
    ff.finish();
  }
  if (auto tr_node = r.child("trapped")) {
    MapReader tr(*tr_node, r.path_of("trapped"));
    auto& t = b.trapped;
    t.baseline = Length{tr.number("L").value_or(t.baseline.value())};
    t.split = Length{tr.number("delta_z").value_or(t.split.value())};
    if (auto time = tr.number("t")) t.interrogation_time = Time{*time};
    tr.finish();
  }
  r.finish();
  return b;
}

// Unit comments written next to scalar values in canonical output.
const std::map<std::string, std::string, std::less<>>& unit_labels() {
  static const std::map<std::string, std::string, std::less<>> labels{
      {"source.M", "kg"},
      {"source.R", "m"},
      {"source.sphere_radius", "m"},
      {"source.mass_density", "kg m^-3"},
      {"source.direct_epsilon", "s^-2"},
      {"trap.omega0", "rad s^-1"},
      {"trap.frequency_hz", "Hz"},
      {"condensate.species.m", "kg"},
      {"condensate.species.a_scatt", "m"},
      {"condensate.species.D", "cm^6 s^-1"},
      {"condensate.T", "K"},
      {"scheme.chi", "rad"},
      {"t_requested", "s"},
      {"baseline_length", "m"},
      {"baselines.free_fall.s", "m"},
      {"baselines.free_fall.lambda_laser", "m"},
      {"baselines.free_fall.t_free", "s"},
      {"baselines.trapped.L", "m"},
      {"baselines.trapped.delta_z", "m"},
      {"baselines.trapped.t", "s"},
  };
  return labels;
}

void emit_node(YAML::Emitter& out, const YAML::Node& node, const std::string& path) {
  if (node.IsMap()) {
    out << YAML::BeginMap;
    for (const auto& kv : node) {
      const auto key = kv.first.as<std::string>();
      const std::string child_path = join_path(path, key);
      out << YAML::Key << key << YAML::Value;
      emit_node(out, kv.second, child_path);
      if (kv.second.IsScalar()) {
        auto it = unit_labels().find(child_path);
        if (it != unit_labels().end()) out << YAML::Comment(it->second);
      }
    }
    out << YAML::EndMap;
  } else if (node.IsSequence()) {
    out << YAML::Flow << YAML::BeginSeq;
    for (const auto& item : node) emit_node(out, item, path);
    out << YAML::EndSeq;
  } else {
    out << node.Scalar();
  }
}

}  // namespace

YAML::Node to_yaml(const Scenario& s) {
  YAML::Node root(YAML::NodeType::Map);
  root["name"] = scalar(s.name);

  YAML::Node source(YAML::NodeType::Map);
  source["kind"] = std::string(to_string(s.source.kind));
  switch (s.source.kind) {
    case SourceKind::kPointEarth:
      source["M"] = scalar(s.source.mass.value());
      source["R"] = scalar(s.source.distance.value());
      break;
    case SourceKind::kSphere:
      source["M"] = scalar(s.source.mass.value());
      source["R"] = scalar(s.source.distance.value());
      source["sphere_radius"] = scalar(s.source.sphere_radius.value());
      break;
    case SourceKind::kDirect:
      source["direct_epsilon"] = scalar(s.source.direct_epsilon.value());
      break;
  }
  root["source"] = source;

  YAML::Node trap(YAML::NodeType::Map);
  trap["omega0"] = scalar(s.trap.omega0.value());
  root["trap"] = trap;

  YAML::Node condensate(YAML::NodeType::Map);
  const auto& sp = s.condensate.species;
  const SpeciesTable& builtin = SpeciesTable::builtin();
  if (builtin.contains(sp.name) && builtin.lookup(sp.name) == sp) {
    condensate["species"] = sp.name;
  } else {
    YAML::Node species(YAML::NodeType::Map);
    species["name"] = sp.name;
    species["m"] = scalar(sp.mass.value());
    species["a_scatt"] = scalar(sp.a_scatt.value());
    species["D"] = scalar(three_body_to_cgs(sp.three_body_D));
    condensate["species"] = species;
  }
  condensate["N_a"] = scalar(s.condensate.atom_number);
  condensate["T"] = scalar(s.condensate.temperature.value());
  root["condensate"] = condensate;

  YAML::Node mode(YAML::NodeType::Map);
  mode["kind"] = s.mode.selection == ModeSelection::kSingle ? "single" : "pair";
  mode["l"] = scalar(static_cast<std::int64_t>(s.mode.l));
  if (s.mode.selection == ModeSelection::kSingle) mode["branch"] = std::string(to_string(s.mode.branch));
  root["mode"] = mode;

  YAML::Node scheme(YAML::NodeType::Map);
  scheme["kind"] = std::string(to_string(s.scheme.kind));
  if (s.scheme.squeezed_number) scheme["N_r"] = scalar(*s.scheme.squeezed_number);
  if (s.scheme.squeezing) scheme["r"] = scalar(*s.scheme.squeezing);
  scheme["chi"] = scalar(s.scheme.chi);
  if (s.scheme.total_number) scheme["N_bar"] = scalar(*s.scheme.total_number);
  if (s.scheme.pump_number) scheme["N_alpha"] = scalar(*s.scheme.pump_number);
  root["scheme"] = scheme;

  root["t_requested"] = scalar(s.t_requested.value());
  root["N_rep"] = scalar(s.n_rep);
  if (s.baseline_length) root["baseline_length"] = scalar(s.baseline_length->value());

  YAML::Node budget(YAML::NodeType::Map);
  budget["safety_fraction"] = scalar(s.budget.safety_fraction);
  budget["damping_prefactor"] = scalar(s.budget.damping_prefactor);
  root["budget"] = budget;

  YAML::Node baselines(YAML::NodeType::Map);
  YAML::Node ff(YAML::NodeType::Map);
  const auto& f = s.baselines.free_fall;
  ff["s"] = scalar(f.setup_size.value());
  ff["lambda_laser"] = scalar(f.laser_wavelength.value());
  ff["convention"] = std::string(to_string(f.convention));
  if (f.n_kick_override) ff["n_kick"] = scalar(static_cast<std::int64_t>(*f.n_kick_override));
  if (f.t_free_override) ff["t_free"] = scalar(f.t_free_override->value());
  baselines["free_fall"] = ff;
  YAML::Node tr(YAML::NodeType::Map);
  const auto& t = s.baselines.trapped;
  tr["L"] = scalar(t.baseline.value());
  tr["delta_z"] = scalar(t.split.value());
  if (t.interrogation_time) tr["t"] = scalar(t.interrogation_time->value());
  baselines["trapped"] = tr;
  root["baselines"] = baselines;
  return root;
}

Scenario scenario_from_yaml(const YAML::Node& root) {
  if (!root || !root.IsMap()) throw Error(ErrorCode::kInvalidInput, "scenario document must be a mapping");
  MapReader r(root, "");
  Scenario s;
  s.name = r.text("name").value_or("scenario");
  s.source = parse_source(required_section(r, "source"));
  s.trap = parse_trap(required_section(r, "trap"));
  s.condensate = parse_condensate(required_section(r, "condensate"));
  if (auto node = r.child("mode")) s.mode = parse_mode(MapReader(*node, "mode"));
  s.scheme = parse_scheme(required_section(r, "scheme"));
  s.t_requested = Time{r.required_number("t_requested")};
  auto n_rep = r.integer("N_rep");
  if (!n_rep) throw Error(ErrorCode::kInvalidInput, "missing required key 'N_rep'");
  s.n_rep = *n_rep;
  if (auto len = r.number("baseline_length")) s.baseline_length = Length{*len};
  if (auto node = r.child("budget")) s.budget = parse_budget(MapReader(*node, "budget"));
  if (auto node = r.child("baselines")) s.baselines = parse_baselines(MapReader(*node, "baselines"));
  r.finish();

  if (!(s.t_requested.value() > 0.0)) throw Error(ErrorCode::kInvalidInput, "'t_requested' must be positive");
  if (s.n_rep < 1) throw Error(ErrorCode::kInvalidInput, "'N_rep' must be >= 1");
  if (s.baseline_length && !(s.baseline_length->value() > 0.0))
    throw Error(ErrorCode::kInvalidInput, "'baseline_length' must be positive");
  return s;
}

std::string serialize(const Scenario& scenario) {
  YAML::Emitter out;
  emit_node(out, to_yaml(scenario), "");
  return std::string(out.c_str()) + "\n";
}

YAML::Node parse_yaml(std::string_view text) {
  try {
    return YAML::Load(std::string(text));
  } catch (const YAML::Exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

Scenario parse_scenario(std::string_view text) { return scenario_from_yaml(parse_yaml(text)); }

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidInput, "cannot open scenario file '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

void set_path(YAML::Node& root, std::string_view dotted_path, const YAML::Node& value) {
  if (dotted_path.empty()) throw Error(ErrorCode::kInvalidInput, "empty override path");
  YAML::Node cur = root;
  std::size_t start = 0;
  while (true) {
    const std::size_t dot = dotted_path.find('.', start);
    const std::string key(dotted_path.substr(start, dot == std::string_view::npos ? dotted_path.size() - start
                                                                                  : dot - start));
    if (key.empty()) throw Error(ErrorCode::kInvalidInput, "malformed path '" + std::string(dotted_path) + "'");
    if (!cur.IsMap() && !cur.IsNull()) {
      throw Error(ErrorCode::kInvalidInput,
                  "cannot descend into scalar while setting '" + std::string(dotted_path) + "'");
    }
    if (dot == std::string_view::npos) {
      cur[key] = value;
      return;
    }
    YAML::Node next = cur[key];
    cur.reset(next);
    start = dot + 1;
  }
}

void apply_override(YAML::Node& root, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos || eq == 0 || eq + 1 == assignment.size()) {
    throw Error(ErrorCode::kInvalidInput, "override must look like key.path=value, got '" + std::string(assignment) + "'");
  }
  set_path(root, assignment.substr(0, eq), parse_yaml(assignment.substr(eq + 1)));
}

Scenario with_overrides(const Scenario& base, const std::vector<std::string>& assignments) {
  if (assignments.empty()) return base;
  YAML::Node root = to_yaml(base);
  for (const auto& a : assignments) apply_override(root, a);
  return scenario_from_yaml(root);
}

Scenario resolve_scenario(std::string_view file_or_preset) {
  for (const auto& p : preset_catalog()) {
    if (p.name == file_or_preset) return preset(p.name);
  }
  const std::filesystem::path path{std::string(file_or_preset)};
  if (!std::filesystem::exists(path)) {
    throw Error(ErrorCode::kUnknownPreset,
                "'" + std::string(file_or_preset) + "' is neither a preset nor an existing file");
  }
  return load_scenario(path);
}

const std::vector<AxisInfo>& sweepable_axes() {
  static const std::vector<AxisInfo> axes{
      {"source.M", "kg"},
      {"source.R", "m"},
      {"source.sphere_radius", "m"},
      {"source.mass_density", "kg m^-3"},
      {"source.direct_epsilon", "s^-2"},
      {"trap.omega0", "rad s^-1"},
      {"condensate.N_a", ""},
      {"condensate.T", "K"},
      {"mode.l", ""},
      {"scheme.N_r", ""},
      {"scheme.r", ""},
      {"scheme.chi", "rad"},
      {"scheme.N_bar", ""},
      {"scheme.N_alpha", ""},
      {"t_requested", "s"},
      {"N_rep", ""},
      {"baseline_length", "m"},
      {"budget.safety_fraction", ""},
      {"budget.damping_prefactor", ""},
  };
  return axes;
}

std::optional<AxisInfo> find_axis(std::string_view path) {
  for (const auto& a : sweepable_axes()) {
    if (a.path == path) return a;
  }
  return std::nullopt;
}

}  // namespace phonograd
