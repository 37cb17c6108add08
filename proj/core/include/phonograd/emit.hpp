#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "phonograd/report.hpp"

namespace phonograd {

enum class Format { kTable, kCsv, kRecords };

Format parse_format(std::string_view name);  // "table" | "csv" | "records"

using Cell = std::variant<std::monostate, double, std::int64_t, std::string>;

/// One labelled value of a report. Missing values are monostate.
struct Field {
  std::string section;
  std::string key;
  Cell value;
  std::string unit;  // empty for dimensionless and text fields
};

/// Fixed schema: the same keys in the same order for every report.
std::vector<Field> report_fields(const SensitivityReport& report);

/// Keys of report_fields with their units; used to validate sweep outputs.
const std::vector<Field>& report_schema();

struct Column {
  std::string name;
  std::string unit;
};

struct Table {
  std::string title;
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;
};

struct EmitOptions {
  bool color = false;  // ANSI styling in kTable output
};

/// Byte-deterministic. CSV numbers use 9 significant digits in scientific
/// notation; records are JSON Lines with unit annotations.
std::string emit(const SensitivityReport& report, Format format, const EmitOptions& options = {});
std::string emit(const Table& table, Format format, const EmitOptions& options = {});

Table comparison_table(const ScenarioComparison& comparison);
Table presets_table();

/// Decade of the leading digit, "~1e-07" style (3.3e-2 -> "~1e-02").
std::string order_of_magnitude(double v);

}  // namespace phonograd
