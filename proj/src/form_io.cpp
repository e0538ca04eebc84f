#include "hl/form_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <fmt/format.h>
#include <fmt/ostream.h>

namespace hl {

namespace {

void write_header(std::ostream &out, Field field, int m, int n)
{
  fmt::print(out, "hlform 1\nfield {}\nm {}\nn {}\n", to_string(field), m, n);
}

// Next line that is neither blank nor a comment.
bool next_line(std::istream &in, std::string &line)
{
  while (std::getline(in, line)) {
    auto const first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') {
      continue;
    }
    return true;
  }
  return false;
}

std::string expect_key(std::istream &in, std::string const &key)
{
  std::string line;
  if (!next_line(in, line)) {
    throw FormatError("unexpected end of file, expected '" + key + "'");
  }
  std::istringstream ss(line);
  std::string k, v, extra;
  ss >> k >> v;
  if (k != key || v.empty() || (ss >> extra)) {
    throw FormatError("expected '" + key + " <value>', got '" + line + "'");
  }
  return v;
}

int parse_int(std::string const &text, std::string const &what)
{
  try {
    std::size_t used = 0;
    int const v = std::stoi(text, &used);
    if (used != text.size()) {
      throw FormatError(what + " is not an integer");
    }
    return v;
  } catch (std::logic_error const &) {
    throw FormatError(what + " is not an integer");
  }
}

template <typename Scalar>
MultilinearForm<Scalar> read_body(std::istream &in, int m, int n)
{
  Index const count = checked_power(n, m);
  Vec<Scalar> coeffs(count);
  std::string line;
  for (Index i = 0; i < count; ++i) {
    if (!next_line(in, line)) {
      throw FormatError(fmt::format("expected {} coefficients, found {}", count, i));
    }
    std::istringstream ss(line);
    double re = 0, im = 0;
    if (!(ss >> re)) {
      throw FormatError("malformed coefficient line '" + line + "'");
    }
    if constexpr (std::is_same_v<Scalar, double>) {
      coeffs[i] = re;
    } else {
      if (!(ss >> im)) {
        throw FormatError("complex coefficient needs real and imaginary parts: '" + line + "'");
      }
      coeffs[i] = Scalar(re, im);
    }
    std::string extra;
    if (ss >> extra) {
      throw FormatError("trailing data on coefficient line '" + line + "'");
    }
  }
  if (next_line(in, line)) {
    throw FormatError("trailing data after coefficients");
  }
  return MultilinearForm<Scalar>(m, n, std::move(coeffs));
}

} // namespace

void write_form(std::ostream &out, RealForm const &T)
{
  write_header(out, Field::Real, T.order(), T.dim());
  for (double c : T.coefficients()) {
    fmt::print(out, "{:.17g}\n", c);
  }
}

void write_form(std::ostream &out, ComplexForm const &T)
{
  write_header(out, Field::Complex, T.order(), T.dim());
  for (auto const &c : T.coefficients()) {
    fmt::print(out, "{:.17g} {:.17g}\n", c.real(), c.imag());
  }
}

void write_form(std::ostream &out, AnyForm const &T)
{
  std::visit([&out](auto const &form) { write_form(out, form); }, T);
}

AnyForm read_form(std::istream &in)
{
  std::string line;
  if (!next_line(in, line)) {
    throw FormatError("empty form file");
  }
  {
    std::istringstream ss(line);
    std::string magic, version;
    ss >> magic >> version;
    if (magic != "hlform") {
      throw FormatError("missing 'hlform' header");
    }
    if (version != "1") {
      throw FormatError("unsupported form format version '" + version + "'");
    }
  }
  std::string const field_text = expect_key(in, "field");
  Field field;
  try {
    field = parse_field(field_text);
  } catch (std::invalid_argument const &e) {
    throw FormatError(e.what());
  }
  int const m = parse_int(expect_key(in, "m"), "m");
  int const n = parse_int(expect_key(in, "n"), "n");
  if (m < 1 || n < 1) {
    throw FormatError("m and n must be positive");
  }
  if (field == Field::Real) {
    return read_body<double>(in, m, n);
  }
  return read_body<std::complex<double>>(in, m, n);
}

void save_form(std::filesystem::path const &path, AnyForm const &T)
{
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  }
  write_form(out, T);
}

AnyForm load_form(std::filesystem::path const &path)
{
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open '" + path.string() + "'");
  }
  return read_form(in);
}

Field field_of_form(AnyForm const &T) { return std::holds_alternative<RealForm>(T) ? Field::Real : Field::Complex; }

} // namespace hl
