#include "hl/report_io.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ostream.h>

namespace hl {

OutputFormat parse_output_format(std::string_view text)
{
  if (text == "table") {
    return OutputFormat::Table;
  }
  if (text == "csv") {
    return OutputFormat::Csv;
  }
  if (text == "json") {
    return OutputFormat::Json;
  }
  throw std::invalid_argument("unknown format '" + std::string(text) + "' (expected table|csv|json)");
}

Cell const &Record::at(std::string_view name) const
{
  for (auto const &[key, value] : fields) {
    if (key == name) {
      return value;
    }
  }
  throw std::out_of_range("record has no field '" + std::string(name) + "'");
}

namespace {

template <typename T>
T parse_number(std::string const &s)
{
  T value{};
  auto const *end = s.data() + s.size();
  auto const [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("cannot parse number from '" + s + "'");
  }
  return value;
}

std::string format_double(double v, int digits) { return fmt::format("{:.{}g}", v, digits); }

std::string render(Cell const &c, int digits)
{
  return std::visit(
    [digits](auto const &v) -> std::string {
      using T = std::decay_t<decltype(v)>;
      if constexpr (std::is_same_v<T, double>) {
        return format_double(v, digits);
      } else if constexpr (std::is_same_v<T, std::string>) {
        return v;
      } else if constexpr (std::is_same_v<T, bool>) {
        return v ? "true" : "false";
      } else {
        return std::to_string(v);
      }
    },
    c);
}

std::string csv_escape(std::string const &s)
{
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') {
      out += '"';
    }
    out += ch;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(std::string_view line)
{
  std::vector<std::string> cells;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char const ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      cells.push_back(std::move(cur));
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  cells.push_back(std::move(cur));
  return cells;
}

} // namespace

double cell_double(Cell const &c)
{
  if (auto const *d = std::get_if<double>(&c)) {
    return *d;
  }
  if (auto const *i = std::get_if<std::int64_t>(&c)) {
    return static_cast<double>(*i);
  }
  if (auto const *u = std::get_if<std::uint64_t>(&c)) {
    return static_cast<double>(*u);
  }
  if (auto const *s = std::get_if<std::string>(&c)) {
    return parse_number<double>(*s);
  }
  throw std::invalid_argument("cell is not numeric");
}

std::int64_t cell_int(Cell const &c)
{
  if (auto const *i = std::get_if<std::int64_t>(&c)) {
    return *i;
  }
  if (auto const *u = std::get_if<std::uint64_t>(&c)) {
    return static_cast<std::int64_t>(*u);
  }
  if (auto const *s = std::get_if<std::string>(&c)) {
    return parse_number<std::int64_t>(*s);
  }
  throw std::invalid_argument("cell is not an integer");
}

std::uint64_t cell_uint(Cell const &c)
{
  if (auto const *u = std::get_if<std::uint64_t>(&c)) {
    return *u;
  }
  if (auto const *i = std::get_if<std::int64_t>(&c)) {
    return static_cast<std::uint64_t>(*i);
  }
  if (auto const *s = std::get_if<std::string>(&c)) {
    return parse_number<std::uint64_t>(*s);
  }
  throw std::invalid_argument("cell is not an unsigned integer");
}

std::string cell_string(Cell const &c) { return render(c, 17); }

bool cell_bool(Cell const &c)
{
  if (auto const *b = std::get_if<bool>(&c)) {
    return *b;
  }
  auto const s = cell_string(c);
  if (s == "true" || s == "1") {
    return true;
  }
  if (s == "false" || s == "0") {
    return false;
  }
  throw std::invalid_argument("cell is not a boolean: '" + s + "'");
}

Record to_record(BoundReport const &r)
{
  Record rec;
  rec.add("m", std::int64_t{r.m});
  rec.add("p", r.p.to_string());
  rec.add("field", std::string(to_string(r.field)));
  rec.add("theorem1_bound", r.theorem1_bound);
  rec.add("section3_bound", r.section3_bound);
  rec.add("legacy_bound", r.legacy_bound);
  rec.add("bh_bound", r.bh_bound);
  rec.add("asymptotic_envelope", r.asymptotic_envelope);
  rec.add("kappa", r.kappa);
  rec.add("section3_fallback", r.section3_fallback);
  return rec;
}

BoundReport bound_report_from_record(Record const &rec)
{
  BoundReport r;
  r.m = static_cast<int>(cell_int(rec.at("m")));
  r.p = ExtendedReal::parse(cell_string(rec.at("p")));
  r.field = parse_field(cell_string(rec.at("field")));
  r.theorem1_bound = cell_double(rec.at("theorem1_bound"));
  r.section3_bound = cell_double(rec.at("section3_bound"));
  r.legacy_bound = cell_double(rec.at("legacy_bound"));
  r.bh_bound = cell_double(rec.at("bh_bound"));
  r.asymptotic_envelope = cell_double(rec.at("asymptotic_envelope"));
  r.kappa = cell_double(rec.at("kappa"));
  r.section3_fallback = cell_bool(rec.at("section3_fallback"));
  return r;
}

Record to_record(ExponentLadder const &ladder)
{
  Record rec;
  rec.add("m", std::int64_t{ladder.m});
  rec.add("p", ladder.p.to_string());
  rec.add("rho", to_string(ladder.rho));
  rec.add("s", to_string(ladder.s));
  for (std::size_t j = 0; j < ladder.lambda.size(); ++j) {
    rec.add(fmt::format("lambda_{}", j), to_string(ladder.lambda[j]));
  }
  rec.add("theta1", to_string(ladder.theta1));
  rec.add("theta2", to_string(ladder.theta2));
  return rec;
}

Record to_record(TrialRecord const &t)
{
  Record rec;
  rec.add("trial", std::int64_t{t.trial});
  rec.add("n", std::int64_t{t.n});
  rec.add("form_seed", t.form_seed);
  rec.add("exponent", t.exponent);
  rec.add("bound", t.bound);
  rec.add("mixed_norm", t.result.mixed_norm);
  rec.add("op_norm_estimate", t.result.op_norm_estimate);
  rec.add("ratio", t.result.ratio);
  rec.add("restarts_used", std::int64_t{t.result.restarts_used});
  rec.add("oracle", std::string(to_string(t.result.oracle)));
  rec.add("seed", t.result.seed);
  rec.add("status", std::string(to_string(t.status)));
  return rec;
}

TrialRecord trial_record_from_record(Record const &rec)
{
  TrialRecord t;
  t.trial = static_cast<int>(cell_int(rec.at("trial")));
  t.n = static_cast<int>(cell_int(rec.at("n")));
  t.form_seed = cell_uint(rec.at("form_seed"));
  t.exponent = cell_double(rec.at("exponent"));
  t.bound = cell_double(rec.at("bound"));
  t.result.mixed_norm = cell_double(rec.at("mixed_norm"));
  t.result.op_norm_estimate = cell_double(rec.at("op_norm_estimate"));
  t.result.ratio = cell_double(rec.at("ratio"));
  t.result.restarts_used = static_cast<int>(cell_int(rec.at("restarts_used")));
  t.result.oracle = parse_norm_oracle(cell_string(rec.at("oracle")));
  t.result.seed = cell_uint(rec.at("seed"));
  auto const status = cell_string(rec.at("status"));
  for (auto s : {Soundness::NotChecked, Soundness::Pass, Soundness::Flag, Soundness::Violation}) {
    if (to_string(s) == status) {
      t.status = s;
    }
  }
  return t;
}

Record to_record(SweepRow const &row)
{
  Record rec;
  rec.add("n", std::int64_t{row.n});
  rec.add("exponent_used", row.exponent_used);
  rec.add("best_ratio", row.best_ratio);
  rec.add("median_ratio", row.median_ratio);
  rec.add("trials", std::int64_t{row.trials});
  rec.add("oracle", row.oracle);
  return rec;
}

SweepRow sweep_row_from_record(Record const &rec)
{
  SweepRow row;
  row.n = static_cast<int>(cell_int(rec.at("n")));
  row.exponent_used = cell_double(rec.at("exponent_used"));
  row.best_ratio = cell_double(rec.at("best_ratio"));
  row.median_ratio = cell_double(rec.at("median_ratio"));
  row.trials = static_cast<int>(cell_int(rec.at("trials")));
  row.oracle = cell_string(rec.at("oracle"));
  return row;
}

Record to_record(GrowthRow const &row)
{
  Record rec;
  rec.add("m", std::int64_t{row.m});
  rec.add("p", row.p.to_string());
  rec.add("bound", row.bound);
  rec.add("legacy", row.legacy);
  rec.add("log_ratio", row.log_ratio);
  return rec;
}

GrowthRow growth_row_from_record(Record const &rec)
{
  GrowthRow row;
  row.m = static_cast<int>(cell_int(rec.at("m")));
  row.p = ExtendedReal::parse(cell_string(rec.at("p")));
  row.bound = cell_double(rec.at("bound"));
  row.legacy = cell_double(rec.at("legacy"));
  row.log_ratio = cell_double(rec.at("log_ratio"));
  return row;
}

nlohmann::ordered_json to_json(Record const &r)
{
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (auto const &[key, value] : r.fields) {
    std::visit([&j, &key](auto const &v) { j[key] = v; }, value);
  }
  return j;
}

nlohmann::ordered_json to_json(std::vector<Record> const &rows)
{
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (auto const &r : rows) {
    j.push_back(to_json(r));
  }
  return j;
}

Record record_from_json(nlohmann::json const &j)
{
  Record rec;
  for (auto it = j.begin(); it != j.end(); ++it) {
    auto const &v = it.value();
    if (v.is_boolean()) {
      rec.add(it.key(), v.get<bool>());
    } else if (v.is_number_unsigned()) {
      rec.add(it.key(), v.get<std::uint64_t>());
    } else if (v.is_number_integer()) {
      rec.add(it.key(), v.get<std::int64_t>());
    } else if (v.is_number_float()) {
      rec.add(it.key(), v.get<double>());
    } else if (v.is_string()) {
      rec.add(it.key(), v.get<std::string>());
    } else {
      throw std::invalid_argument("unsupported JSON value for field '" + it.key() + "'");
    }
  }
  return rec;
}

std::string csv_header(Record const &r)
{
  std::string out;
  for (std::size_t i = 0; i < r.fields.size(); ++i) {
    out += (i ? "," : "") + csv_escape(r.fields[i].first);
  }
  return out;
}

std::string csv_row(Record const &r)
{
  std::string out;
  for (std::size_t i = 0; i < r.fields.size(); ++i) {
    out += (i ? "," : "") + csv_escape(render(r.fields[i].second, 17));
  }
  return out;
}

void write_csv(std::ostream &out, std::vector<Record> const &rows)
{
  if (rows.empty()) {
    return;
  }
  out << csv_header(rows.front()) << '\n';
  for (auto const &r : rows) {
    out << csv_row(r) << '\n';
  }
}

std::vector<Record> parse_csv(std::string_view text)
{
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto const nl = text.find('\n');
    auto line = text.substr(0, nl);
    auto const first = line.find_first_not_of(" \r");
    if (first != std::string_view::npos && line[first] != '#') {
      lines.push_back(line);
    }
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
  }
  std::vector<Record> rows;
  if (lines.empty()) {
    return rows;
  }
  auto const header = split_csv_line(lines.front());
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto const cells = split_csv_line(lines[i]);
    if (cells.size() != header.size()) {
      throw std::invalid_argument(fmt::format("csv row {} has {} cells, header has {}", i, cells.size(), header.size()));
    }
    Record rec;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      rec.add(header[c], cells[c]);
    }
    rows.push_back(std::move(rec));
  }
  return rows;
}

void write_table(std::ostream &out, std::vector<Record> const &rows)
{
  if (rows.empty()) {
    return;
  }
  auto const &columns = rows.front().fields;
  std::vector<std::size_t> widths;
  for (auto const &[name, value] : columns) {
    widths.push_back(name.size());
  }
  std::vector<std::vector<std::string>> cells;
  for (auto const &r : rows) {
    auto &line = cells.emplace_back();
    for (std::size_t c = 0; c < r.fields.size() && c < widths.size(); ++c) {
      line.push_back(render(r.fields[c].second, 9));
      widths[c] = std::max(widths[c], line.back().size());
    }
  }
  for (std::size_t c = 0; c < columns.size(); ++c) {
    fmt::print(out, "{}{:<{}}", c ? "  " : "", columns[c].first, widths[c]);
  }
  out << '\n';
  for (auto const &line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      fmt::print(out, "{}{:<{}}", c ? "  " : "", line[c], widths[c]);
    }
    out << '\n';
  }
}

void write_records(std::ostream &out, std::vector<Record> const &rows, OutputFormat format)
{
  switch (format) {
  case OutputFormat::Table: write_table(out, rows); break;
  case OutputFormat::Csv: write_csv(out, rows); break;
  case OutputFormat::Json: out << to_json(rows).dump(2) << '\n'; break;
  }
}

} // namespace hl
