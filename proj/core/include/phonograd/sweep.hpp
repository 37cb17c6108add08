#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phonograd/emit.hpp"
#include "phonograd/report.hpp"
#include "phonograd/scenario.hpp"

namespace phonograd {

/// Extra path swept in lock-step with the primary axis.
struct CoAxis {
  std::string path;
  std::vector<double> values;
};

struct SweepSpec {
  std::string name;
  Scenario base;
  std::string axis;
  std::vector<double> values;
  std::vector<CoAxis> with;
  std::vector<std::string> outputs{"delta_rel", "delta_abs", "force_equiv_gal"};
};

/// Throws kInvalidAxis for unknown/non-sweepable paths, mismatched co-axis
/// lengths, empty value lists or unknown output keys.
void validate(const SweepSpec& spec);

/// Sweep file: base (preset name, file path, or inline scenario map), axis,
/// values or range {from, to, count, scale: linear|log}, optional with, outputs.
SweepSpec parse_sweep(std::string_view text, const std::filesystem::path& base_dir = {});
SweepSpec load_sweep(const std::filesystem::path& path);

/// Inclusive range helpers; count >= 1.
std::vector<double> linear_range(double from, double to, int count);
std::vector<double> log_range(double from, double to, int count);

struct SweepRow {
  double axis_value = 0.0;
  std::vector<double> co_values;
  std::optional<SensitivityReport> report;
  std::string error_code;  // empty on success
  std::string error_message;
};

struct SweepResult {
  SweepSpec spec;
  std::vector<SweepRow> rows;  // same order as spec.values
};

/// The scenario evaluated for row i.
Scenario sweep_point(const SweepSpec& spec, std::size_t i);

/// Rows are independent; a failing row records its error and the sweep goes
/// on. Output is identical for any worker count.
SweepResult run_sweep(const SweepSpec& spec, unsigned workers = 1);

Table sweep_table(const SweepResult& result);

}  // namespace phonograd
