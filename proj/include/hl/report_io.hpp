#pragma once

#include "hl/constants.hpp"
#include "hl/experiments.hpp"
#include "hl/exponents.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace hl {

enum class OutputFormat
{
  Table,
  Csv,
  Json
};

OutputFormat parse_output_format(std::string_view text);

using Cell = std::variant<std::int64_t, std::uint64_t, double, std::string, bool>;

/// One flat row; column names are the field names of the source struct.
struct Record
{
  std::vector<std::pair<std::string, Cell>> fields;

  Cell const &at(std::string_view name) const;
  void add(std::string name, Cell value) { fields.emplace_back(std::move(name), std::move(value)); }
};

double cell_double(Cell const &c);
std::int64_t cell_int(Cell const &c);
std::uint64_t cell_uint(Cell const &c);
std::string cell_string(Cell const &c);
bool cell_bool(Cell const &c);

Record to_record(BoundReport const &r);
BoundReport bound_report_from_record(Record const &r);

/// m, p, rho, s, lambda_0 .. lambda_m, theta1, theta2 as exact fractions.
Record to_record(ExponentLadder const &ladder);

Record to_record(TrialRecord const &t);
TrialRecord trial_record_from_record(Record const &r);

Record to_record(SweepRow const &row);
SweepRow sweep_row_from_record(Record const &r);

Record to_record(GrowthRow const &row);
GrowthRow growth_row_from_record(Record const &r);

nlohmann::ordered_json to_json(Record const &r);
nlohmann::ordered_json to_json(std::vector<Record> const &rows);
Record record_from_json(nlohmann::json const &j);

/// Doubles use 17 significant digits.
std::string csv_header(Record const &r);
std::string csv_row(Record const &r);
void write_csv(std::ostream &out, std::vector<Record> const &rows);
/// Header row plus data rows; every cell comes back as a string. Lines
/// starting with '#' are skipped.
std::vector<Record> parse_csv(std::string_view text);

/// Aligned columns, doubles at 9 significant digits.
void write_table(std::ostream &out, std::vector<Record> const &rows);

void write_records(std::ostream &out, std::vector<Record> const &rows, OutputFormat format);

} // namespace hl
