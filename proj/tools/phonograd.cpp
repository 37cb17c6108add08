// phonograd: command-line front end for scenario reports, sweeps and
// baseline comparisons.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "phonograd/emit.hpp"
#include "phonograd/error.hpp"
#include "phonograd/report.hpp"
#include "phonograd/scenario.hpp"
#include "phonograd/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitOther = 1;
constexpr int kExitInput = 2;
constexpr int kExitPhysics = 3;

struct CommonOptions {
  std::string format = "table";
  std::string output;
  std::vector<std::string> overrides;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--format,-f", opts.format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "records"}))
      ->capture_default_str();
  cmd->add_option("--output,-o", opts.output, "Write to this file instead of stdout");
  cmd->add_option("--override", opts.overrides, "Set a scenario field, e.g. condensate.N_a=1e8 (repeatable)");
}

bool use_color(const CommonOptions& opts) {
  if (opts.format != "table" || !opts.output.empty()) return false;
  if (const char* nc = std::getenv("NO_COLOR"); nc && *nc) return false;
  return ::isatty(STDOUT_FILENO) != 0;
}

void write_out(const CommonOptions& opts, const std::string& text) {
  if (opts.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.output, std::ios::binary);
  if (!out) throw phonograd::Error(phonograd::ErrorCode::kInvalidInput, "cannot write '" + opts.output + "'");
  out << text;
}

phonograd::Scenario load(const std::string& target, const CommonOptions& opts) {
  return phonograd::with_overrides(phonograd::resolve_scenario(target), opts.overrides);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gravity-gradient sensitivity of trapped-condensate phonon sensors"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "phonograd 0.1.0");

  CommonOptions report_opts;
  std::string report_target;
  auto* report = app.add_subcommand("report", "Run the full pipeline for one scenario");
  report->add_option("scenario", report_target, "Scenario file or preset name")->required();
  add_common(report, report_opts);

  CommonOptions compare_opts;
  std::string compare_target;
  auto* compare = app.add_subcommand("compare", "Phononic bound next to the matter-wave baselines");
  compare->add_option("scenario", compare_target, "Scenario file or preset name")->required();
  add_common(compare, compare_opts);

  CommonOptions sweep_opts;
  std::string sweep_file;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  auto* sweep = app.add_subcommand("sweep", "Evaluate a scenario over a list of parameter values");
  sweep->add_option("file", sweep_file, "Sweep file")->required();
  sweep->add_option("--threads,-j", threads, "Worker threads")->check(CLI::Range(1u, 1024u));
  add_common(sweep, sweep_opts);

  CommonOptions presets_opts;
  std::string show;
  auto* presets = app.add_subcommand("presets", "List built-in scenarios");
  presets->add_option("--show", show, "Print the scenario file of one preset");
  add_common(presets, presets_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  using namespace phonograd;
  try {
    if (*report) {
      const auto fmt = parse_format(report_opts.format);
      const auto r = run_report(load(report_target, report_opts));
      write_out(report_opts, emit(r, fmt, {use_color(report_opts)}));
    } else if (*compare) {
      const auto fmt = parse_format(compare_opts.format);
      const auto c = run_comparison(load(compare_target, compare_opts));
      std::string text = emit(comparison_table(c), fmt, {use_color(compare_opts)});
      if (fmt == Format::kTable) {
        for (const auto& w : c.report.warnings) text += "warning [" + w.code + "] " + w.message + "\n";
      }
      write_out(compare_opts, text);
    } else if (*sweep) {
      const auto fmt = parse_format(sweep_opts.format);
      SweepSpec spec = load_sweep(sweep_file);
      spec.base = with_overrides(spec.base, sweep_opts.overrides);
      const auto result = run_sweep(spec, threads);
      write_out(sweep_opts, emit(sweep_table(result), fmt, {use_color(sweep_opts)}));
    } else if (*presets) {
      if (!show.empty()) {
        write_out(presets_opts, serialize(with_overrides(preset(show), presets_opts.overrides)));
      } else {
        write_out(presets_opts, emit(presets_table(), parse_format(presets_opts.format), {use_color(presets_opts)}));
      }
    }
  } catch (const Error& e) {
    std::cerr << "phonograd: ";
    if (!e.stage().empty()) std::cerr << "[" << e.stage() << "] ";
    std::cerr << e.what() << "\n";
    return is_input_error(e.code()) ? kExitInput : kExitPhysics;
  } catch (const std::exception& e) {
    std::cerr << "phonograd: " << e.what() << "\n";
    return kExitOther;
  }
  return kExitOk;
}
