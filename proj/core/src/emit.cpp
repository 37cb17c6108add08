#include "phonograd/emit.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "phonograd/error.hpp"

namespace phonograd {

namespace {

using json = nlohmann::ordered_json;

Cell opt(const std::optional<double>& v) { return v ? Cell{*v} : Cell{}; }
Cell integer(std::int64_t v) { return Cell{v}; }
Cell text(std::string_view v) { return Cell{std::string(v)}; }

// "force_equiv_gal" already names its unit, so CSV does not repeat it.
std::string column_label(const std::string& key, const std::string& unit) {
  if (unit.empty()) return key;
  std::string lower = unit;
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  const std::string suffix = "_" + lower;
  if (key.size() > suffix.size() && key.compare(key.size() - suffix.size(), suffix.size(), suffix) == 0) return key;
  std::string label = key + "_" + unit;
  std::replace(label.begin(), label.end(), ' ', '_');
  return label;
}

std::string csv_cell(const Cell& c) {
  struct V {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(double d) const {
      if (std::isnan(d)) return "nan";
      if (std::isinf(d)) return d > 0 ? "inf" : "-inf";
      return fmt::format("{:.8e}", d);
    }
    std::string operator()(std::int64_t i) const { return fmt::format("{}", i); }
    std::string operator()(const std::string& s) const {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string out = "\"";
      for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
      }
      return out + "\"";
    }
  };
  return std::visit(V{}, c);
}

std::string table_cell(const Cell& c) {
  struct V {
    std::string operator()(std::monostate) const { return "-"; }
    std::string operator()(double d) const { return fmt::format("{:.6g}", d); }
    std::string operator()(std::int64_t i) const { return fmt::format("{}", i); }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(V{}, c);
}

json json_cell(const Cell& c) {
  struct V {
    json operator()(std::monostate) const { return nullptr; }
    json operator()(double d) const { return std::isfinite(d) ? json(d) : json(nullptr); }
    json operator()(std::int64_t i) const { return i; }
    json operator()(const std::string& s) const { return s; }
  };
  return std::visit(V{}, c);
}

std::string magnitude_cell(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) return order_of_magnitude(*d);
  return "";
}

std::string join_codes(const std::vector<Warning>& warnings) {
  std::string out;
  for (const auto& w : warnings) {
    if (!out.empty()) out += ";";
    out += w.code;
  }
  return out;
}

std::string pad(const std::string& s, std::size_t width, bool right) {
  if (s.size() >= width) return s;
  const std::string fill(width - s.size(), ' ');
  return right ? fill + s : s + fill;
}

constexpr const char* kBold = "\x1b[1m";
constexpr const char* kDim = "\x1b[2m";
constexpr const char* kYellow = "\x1b[33m";
constexpr const char* kReset = "\x1b[0m";

std::string render_grid(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& body,
                        const std::vector<bool>& right_align, bool color) {
  std::vector<std::size_t> width(header.size(), 0);
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& row : body)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());

  std::string out;
  auto line = [&](const std::vector<std::string>& cells, bool is_header) {
    std::string l;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) l += "  ";
      l += pad(cells[i], width[i], !is_header && right_align[i]);
    }
    while (!l.empty() && l.back() == ' ') l.pop_back();
    if (is_header && color) l = kBold + l + kReset;
    out += l + "\n";
  };
  line(header, true);
  std::size_t total = 0;
  for (auto w : width) total += w;
  total += 2 * (width.empty() ? 0 : width.size() - 1);
  out += (color ? std::string(kDim) : "") + std::string(total, '-') + (color ? kReset : "") + "\n";
  for (const auto& row : body) line(row, false);
  return out;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "table") return Format::kTable;
  if (name == "csv") return Format::kCsv;
  if (name == "records") return Format::kRecords;
  throw Error(ErrorCode::kInvalidInput, "unknown format '" + std::string(name) + "' (table, csv, records)");
}

std::vector<Field> report_fields(const SensitivityReport& r) {
  const auto& s = r.scenario;
  const auto& b = r.bound;
  const bool pair = r.pair.has_value();
  std::vector<Field> f;
  f.reserve(48);
  auto add = [&](const char* section, const char* key, Cell value, const char* unit = "") {
    f.push_back(Field{section, key, std::move(value), unit});
  };

  add("scenario", "name", text(s.name));
  add("source", "source_kind", text(to_string(s.source.kind)));
  add("source", "epsilon_grad", r.trap.epsilon_grad.value(), "s^-2");
  add("source", "stiffness_ratio", r.trap.stiffness_ratio());

  add("trap", "omega0", r.trap.omega0.value(), "rad s^-1");
  add("trap", "omega_perp", r.trap.omega_perp.value(), "rad s^-1");
  add("trap", "omega_z", r.trap.omega_z.value(), "rad s^-1");
  add("trap", "lambda", r.trap.lambda);
  add("trap", "z_g", r.trap.z_g.value(), "m");
  add("trap", "constant_offset", r.constant_offset.value(), "J");

  add("condensate", "species", text(s.condensate.species.name));
  add("condensate", "N_a", r.profile.atom_number);
  add("condensate", "T", s.condensate.temperature.value(), "K");
  add("condensate", "tf_radius", r.profile.radius.value(), "m");
  add("condensate", "mu", r.profile.mu.value(), "J");
  add("condensate", "n0", r.profile.n0.value(), "m^-3");
  add("condensate", "n0_cgs", density_to_cgs(r.profile.n0), "cm^-3");
  add("condensate", "tf_parameter", r.profile.tf_parameter);
  add("condensate", "tf_validity", text(to_string(r.validity)));

  add("mode", "mode_kind", text(pair ? "pair" : "single"));
  add("mode", "l", integer(r.mode.l));
  add("mode", "branch", pair ? Cell{} : text(to_string(r.mode.branch)));
  add("mode", "alpha", pair ? Cell{} : Cell{r.mode.alpha});
  add("mode", "omega_exact", r.mode.omega_exact.value(), "rad s^-1");
  add("mode", "omega_approx", r.mode.omega_approx.value(), "rad s^-1");
  add("mode", "delta_omega_exact", pair ? Cell{r.pair->delta_omega_exact.value()} : Cell{}, "rad s^-1");
  add("mode", "delta_omega_approx", pair ? Cell{r.pair->delta_omega_approx.value()} : Cell{}, "rad s^-1");

  add("budget", "t_requested", r.budget.t_requested.value(), "s");
  add("budget", "t_halflife", r.budget.t_halflife.value(), "s");
  add("budget", "t_damping", r.budget.t_damping.value(), "s");
  add("budget", "t_granted", r.budget.t_granted.value(), "s");
  add("budget", "limiting_factor", text(to_string(r.budget.limiting_factor)));

  add("bound", "scheme", text(to_string(s.scheme.kind)));
  add("bound", "qfi", b.qfi);
  add("bound", "N_rep", integer(b.n_rep));
  add("bound", "phase_signal", b.phase_signal, "rad");
  add("bound", "delta_phi", b.delta_phi, "rad");
  add("bound", "delta_rel", opt(b.delta_rel));
  add("bound", "delta_abs", b.delta_abs.value(), "s^-2");
  add("bound", "force_equiv_gal", r.force.gal, "Gal");
  add("bound", "delta_rel_per_shot", opt(b.delta_rel_per_shot));
  add("bound", "delta_abs_per_shot", b.delta_abs_per_shot.value(), "s^-2");
  add("bound", "force_equiv_per_shot_gal", r.force.gal_per_shot, "Gal");

  add("force", "baseline_length", r.force.baseline_length.value(), "m");
  add("force", "force_equiv_accel", r.force.acceleration.value(), "m s^-2");
  add("force", "force_equiv_g", r.force.standard_g, "g");
  add("force", "force_equiv_accel_per_shot", r.force.acceleration_per_shot.value(), "m s^-2");

  add("warnings", "warning_count", integer(static_cast<std::int64_t>(r.warnings.size())));
  add("warnings", "warning_codes", text(join_codes(r.warnings)));
  return f;
}

const std::vector<Field>& report_schema() {
  static const std::vector<Field> schema = [] {
    auto fields = report_fields(run_report(preset("earth-1e6")));
    for (auto& field : fields) field.value = std::monostate{};
    return fields;
  }();
  return schema;
}

std::string emit(const SensitivityReport& report, Format format, const EmitOptions& options) {
  const auto fields = report_fields(report);
  switch (format) {
    case Format::kCsv: {
      std::string header, row;
      for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) {
          header += ",";
          row += ",";
        }
        header += column_label(fields[i].key, fields[i].unit);
        row += csv_cell(fields[i].value);
      }
      return header + "\n" + row + "\n";
    }
    case Format::kRecords: {
      json rec;
      rec["record"] = "report";
      for (const auto& field : fields) {
        if (field.section == "warnings") continue;
        json entry;
        entry["value"] = json_cell(field.value);
        if (!field.unit.empty()) entry["unit"] = field.unit;
        rec[field.section][field.key] = entry;
      }
      json warnings = json::array();
      for (const auto& w : report.warnings) warnings.push_back({{"code", w.code}, {"message", w.message}});
      rec["warnings"] = warnings;
      return rec.dump() + "\n";
    }
    case Format::kTable: {
      std::vector<std::vector<std::string>> body;
      for (const auto& field : fields) {
        if (field.section == "warnings") continue;
        body.push_back({field.section, field.key, table_cell(field.value), field.unit, magnitude_cell(field.value)});
      }
      std::string out = render_grid({"section", "quantity", "value", "unit", "order"}, body,
                                    {false, false, true, false, true}, options.color);
      for (const auto& w : report.warnings) {
        out += options.color ? fmt::format("{}warning{} [{}] {}\n", kYellow, kReset, w.code, w.message)
                             : fmt::format("warning [{}] {}\n", w.code, w.message);
      }
      return out;
    }
  }
  return {};
}

std::string emit(const Table& table, Format format, const EmitOptions& options) {
  switch (format) {
    case Format::kCsv: {
      std::string out;
      for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out += ",";
        out += column_label(table.columns[i].name, table.columns[i].unit);
      }
      out += "\n";
      for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (i) out += ",";
          out += csv_cell(row[i]);
        }
        out += "\n";
      }
      return out;
    }
    case Format::kRecords: {
      std::string out;
      for (std::size_t r = 0; r < table.rows.size(); ++r) {
        json rec;
        rec["record"] = table.title;
        rec["row"] = r;
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
          json entry;
          entry["value"] = json_cell(table.rows[r][i]);
          if (!table.columns[i].unit.empty()) entry["unit"] = table.columns[i].unit;
          rec[table.columns[i].name] = entry;
        }
        out += rec.dump() + "\n";
      }
      return out;
    }
    case Format::kTable: {
      std::vector<std::string> header;
      std::vector<bool> right;
      for (const auto& c : table.columns) header.push_back(c.unit.empty() ? c.name : c.name + " [" + c.unit + "]");
      right.assign(table.columns.size(), false);
      std::vector<std::vector<std::string>> body;
      for (const auto& row : table.rows) {
        std::vector<std::string> cells;
        for (std::size_t i = 0; i < row.size(); ++i) {
          cells.push_back(table_cell(row[i]));
          if (!std::holds_alternative<std::string>(row[i])) right[i] = true;
        }
        body.push_back(std::move(cells));
      }
      std::string out;
      if (!table.title.empty()) out += (options.color ? std::string(kBold) : "") + table.title +
                                       (options.color ? kReset : "") + "\n";
      return out + render_grid(header, body, right, options.color);
    }
  }
  return {};
}

Table comparison_table(const ScenarioComparison& c) {
  Table t;
  t.title = "comparison";
  t.columns = {{"method", ""},         {"epsilon_grad", "s^-2"}, {"delta_rel", ""},
               {"delta_abs", "s^-2"},  {"delta_rel_per_shot", ""}, {"t", "s"},
               {"n_kick", ""},         {"phase_signal", "rad"},    {"phononic_over_row", ""}};
  for (const auto& row : c.table.rows) {
    const auto& s = row.summary;
    Cell time, kick, phase;
    if (s.label == "phononic") {
      time = c.report.budget.t_granted.value();
      phase = c.report.bound.phase_signal;
    } else if (s.label == "free-fall") {
      time = c.free_fall.t_free.value();
      kick = integer(c.free_fall.n_kick);
      phase = c.free_fall.phi_tidal;
    } else if (s.label == "trapped") {
      time = c.trapped.t.value();
      phase = c.trapped.delta_phi_signal;
    }
    t.rows.push_back({text(s.label), s.epsilon_grad.value(), s.delta_rel, s.delta_abs.value(), s.delta_rel_per_shot,
                      time, kick, phase, row.phononic_over_row});
  }
  return t;
}

Table presets_table() {
  Table t;
  t.title = "presets";
  t.columns = {{"name", ""}, {"source", ""}, {"epsilon_grad", "s^-2"}, {"N_a", ""}, {"N_r", ""}, {"description", ""}};
  const auto catalog = preset_catalog();
  for (const auto& info : catalog) {
    const Scenario s = preset(info.name);
    t.rows.push_back({text(info.name), text(to_string(s.source.kind)), gradient_of(s.source).value(),
                      s.condensate.atom_number, s.scheme.resolved_squeezed_number(), text(info.description)});
  }
  return t;
}

std::string order_of_magnitude(double v) {
  if (!std::isfinite(v)) return "";
  if (v == 0.0) return "0";
  const double e = std::floor(std::log10(std::fabs(v)) + 1e-12);
  return fmt::format("~{}1e{:+03d}", v < 0 ? "-" : "", static_cast<int>(e));
}

}  // namespace phonograd
