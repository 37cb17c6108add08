#include "phonograd/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include <fmt/format.h>

#include "phonograd/error.hpp"

namespace phonograd {

namespace {

// Fields that describe the same quantity as the swept path; left in place they
// would make the swept document inconsistent.
std::vector<std::string> exclusive_partners(std::string_view path) {
  if (path == "scheme.N_r") return {"r"};
  if (path == "scheme.r") return {"N_r"};
  if (path == "source.M") return {"mass_density"};
  if (path == "source.mass_density") return {"M"};
  return {};
}

void drop_partners(YAML::Node& root, std::string_view path) {
  const auto partners = exclusive_partners(path);
  if (partners.empty()) return;
  const std::string section(path.substr(0, path.find('.')));
  YAML::Node node = root[section];
  if (!node.IsMap()) return;
  for (const auto& key : partners) node.remove(key);
}

const Field* schema_field(std::string_view key) {
  for (const auto& f : report_schema()) {
    if (f.key == key) return &f;
  }
  return nullptr;
}

std::vector<double> read_numbers(const YAML::Node& node, const std::string& where) {
  if (!node.IsSequence()) throw Error(ErrorCode::kInvalidInput, "'" + where + "' must be a list of numbers");
  std::vector<double> out;
  for (const auto& item : node) {
    try {
      out.push_back(item.as<double>());
    } catch (const YAML::Exception&) {
      throw Error(ErrorCode::kInvalidInput, "'" + where + "' must contain only numbers");
    }
  }
  return out;
}

std::vector<double> read_range(const YAML::Node& node) {
  if (!node.IsMap()) throw Error(ErrorCode::kInvalidInput, "'range' must be a mapping");
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    if (key != "from" && key != "to" && key != "count" && key != "scale")
      throw Error(ErrorCode::kUnknownKey, "unknown key 'range." + key + "'");
  }
  if (!node["from"] || !node["to"] || !node["count"])
    throw Error(ErrorCode::kInvalidInput, "'range' needs from, to and count");
  try {
    const double from = node["from"].as<double>();
    const double to = node["to"].as<double>();
    const int count = node["count"].as<int>();
    const std::string scale = node["scale"] ? node["scale"].as<std::string>() : "linear";
    if (scale == "linear") return linear_range(from, to, count);
    if (scale == "log") return log_range(from, to, count);
    throw Error(ErrorCode::kInvalidInput, "'range.scale' must be linear or log, got '" + scale + "'");
  } catch (const YAML::Exception& e) {
    throw Error(ErrorCode::kInvalidInput, std::string("malformed range: ") + e.what());
  }
}

std::string read_file(const std::filesystem::path& path, const char* what) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidInput, fmt::format("cannot open {} '{}'", what, path.string()));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

void validate(const SweepSpec& spec) {
  if (!find_axis(spec.axis)) {
    throw Error(ErrorCode::kInvalidAxis, "'" + spec.axis + "' is not a sweepable parameter");
  }
  if (spec.values.empty()) throw Error(ErrorCode::kInvalidAxis, "sweep has no values");
  for (const auto& co : spec.with) {
    if (!find_axis(co.path)) throw Error(ErrorCode::kInvalidAxis, "'" + co.path + "' is not a sweepable parameter");
    if (co.path == spec.axis) throw Error(ErrorCode::kInvalidAxis, "'" + co.path + "' is swept twice");
    if (co.values.size() != spec.values.size()) {
      throw Error(ErrorCode::kInvalidAxis,
                  fmt::format("co-axis '{}' has {} values, the axis has {}", co.path, co.values.size(),
                              spec.values.size()));
    }
  }
  for (const auto& out : spec.outputs) {
    if (!schema_field(out)) throw Error(ErrorCode::kInvalidAxis, "unknown output '" + out + "'");
  }
}

std::vector<double> linear_range(double from, double to, int count) {
  if (count < 1) throw Error(ErrorCode::kInvalidInput, "range count must be >= 1");
  if (count == 1) return {from};
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out[i] = from + (to - from) * i / (count - 1);
  out.back() = to;
  return out;
}

std::vector<double> log_range(double from, double to, int count) {
  if (!(from > 0.0) || !(to > 0.0)) throw Error(ErrorCode::kInvalidInput, "log range needs positive bounds");
  auto exps = linear_range(std::log10(from), std::log10(to), count);
  std::vector<double> out;
  for (double e : exps) out.push_back(std::pow(10.0, e));
  out.front() = from;
  if (count > 1) out.back() = to;
  return out;
}

SweepSpec parse_sweep(std::string_view text, const std::filesystem::path& base_dir) {
  const YAML::Node root = parse_yaml(text);
  if (!root.IsMap()) throw Error(ErrorCode::kInvalidInput, "sweep document must be a mapping");
  for (const auto& kv : root) {
    const auto key = kv.first.as<std::string>();
    static const std::vector<std::string> known{"name", "base", "axis", "values", "range", "with", "outputs"};
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw Error(ErrorCode::kUnknownKey, "unknown key '" + key + "' in sweep");
  }

  SweepSpec spec;
  spec.name = root["name"] ? root["name"].as<std::string>() : "sweep";

  const YAML::Node base = root["base"];
  if (!base) throw Error(ErrorCode::kInvalidInput, "sweep needs a 'base' scenario");
  if (base.IsMap()) {
    spec.base = scenario_from_yaml(base);
  } else {
    const std::string ref = base.as<std::string>();
    const auto catalog = preset_catalog();
    const bool is_preset =
        std::any_of(catalog.begin(), catalog.end(), [&](const PresetInfo& p) { return p.name == ref; });
    if (is_preset) {
      spec.base = preset(ref);
    } else {
      std::filesystem::path p(ref);
      if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
      if (!std::filesystem::exists(p))
        throw Error(ErrorCode::kUnknownPreset, "'" + ref + "' is neither a preset nor an existing file");
      spec.base = load_scenario(p);
    }
  }

  if (!root["axis"]) throw Error(ErrorCode::kInvalidInput, "sweep needs an 'axis'");
  spec.axis = root["axis"].as<std::string>();

  if (root["values"] && root["range"]) throw Error(ErrorCode::kInvalidInput, "give either 'values' or 'range'");
  if (root["values"]) {
    spec.values = read_numbers(root["values"], "values");
  } else if (root["range"]) {
    spec.values = read_range(root["range"]);
  } else {
    throw Error(ErrorCode::kInvalidInput, "sweep needs 'values' or 'range'");
  }

  if (const YAML::Node with = root["with"]) {
    if (!with.IsSequence()) throw Error(ErrorCode::kInvalidInput, "'with' must be a list");
    for (const auto& item : with) {
      if (!item.IsMap() || !item["path"] || !item["values"] || item.size() != 2)
        throw Error(ErrorCode::kInvalidInput, "each 'with' entry needs exactly 'path' and 'values'");
      spec.with.push_back(CoAxis{item["path"].as<std::string>(), read_numbers(item["values"], "with.values")});
    }
  }

  if (const YAML::Node outputs = root["outputs"]) {
    if (!outputs.IsSequence()) throw Error(ErrorCode::kInvalidInput, "'outputs' must be a list");
    spec.outputs.clear();
    for (const auto& o : outputs) spec.outputs.push_back(o.as<std::string>());
  }

  validate(spec);
  return spec;
}

SweepSpec load_sweep(const std::filesystem::path& path) {
  return parse_sweep(read_file(path, "sweep file"), path.parent_path());
}

Scenario sweep_point(const SweepSpec& spec, std::size_t i) {
  YAML::Node root = to_yaml(spec.base);
  auto assign = [&](const std::string& path, double value) {
    drop_partners(root, path);
    set_path(root, path, YAML::Node(fmt::format("{}", value)));
  };
  assign(spec.axis, spec.values.at(i));
  for (const auto& co : spec.with) assign(co.path, co.values.at(i));
  Scenario s = scenario_from_yaml(root);
  s.name = fmt::format("{}[{}]", spec.base.name, i);
  return s;
}

SweepResult run_sweep(const SweepSpec& spec, unsigned workers) {
  validate(spec);
  SweepResult result;
  result.spec = spec;
  const std::size_t n = spec.values.size();
  result.rows.resize(n);

  auto run_row = [&](std::size_t i) {
    SweepRow& row = result.rows[i];
    row.axis_value = spec.values[i];
    for (const auto& co : spec.with) row.co_values.push_back(co.values[i]);
    try {
      row.report = run_report(sweep_point(spec, i));
    } catch (const Error& e) {
      row.error_code = std::string(to_string(e.code()));
      row.error_message = e.stage().empty() ? e.what() : e.stage() + ": " + e.what();
    } catch (const std::exception& e) {
      row.error_code = "internal";
      row.error_message = e.what();
    }
  };

  // Build the schema before threads start so its one-time initialisation is not raced.
  (void)report_schema();

  const unsigned w = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n)));
  if (w == 1) {
    for (std::size_t i = 0; i < n; ++i) run_row(i);
    return result;
  }
  std::vector<std::thread> threads;
  threads.reserve(w);
  for (unsigned t = 0; t < w; ++t) {
    threads.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += w) run_row(i);
    });
  }
  for (auto& th : threads) th.join();
  return result;
}

Table sweep_table(const SweepResult& result) {
  const auto& spec = result.spec;
  Table t;
  t.title = spec.name;
  t.columns.push_back({spec.axis, find_axis(spec.axis)->unit});
  for (const auto& co : spec.with) t.columns.push_back({co.path, find_axis(co.path)->unit});
  std::vector<std::size_t> index;
  for (const auto& out : spec.outputs) {
    const Field* f = schema_field(out);
    t.columns.push_back({f->key, f->unit});
    index.push_back(static_cast<std::size_t>(f - report_schema().data()));
  }
  t.columns.push_back({"status", ""});

  for (const auto& row : result.rows) {
    std::vector<Cell> cells;
    cells.push_back(row.axis_value);
    for (double v : row.co_values) cells.push_back(v);
    if (row.report) {
      const auto fields = report_fields(*row.report);
      for (std::size_t k : index) cells.push_back(fields[k].value);
      cells.push_back(std::string("ok"));
    } else {
      for (std::size_t k = 0; k < index.size(); ++k) cells.push_back(std::monostate{});
      cells.push_back(row.error_message);
    }
    t.rows.push_back(std::move(cells));
  }
  return t;
}

}  // namespace phonograd
