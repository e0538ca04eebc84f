#pragma once

#include "hl/multilinear.hpp"

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <variant>

namespace hl {

using AnyForm = std::variant<RealForm, ComplexForm>;

struct FormatError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

// Text format, version 1:
//
//   hlform 1
//   field real|complex
//   m <order>
//   n <dimension>
//   <n^m lines, row-major with j_m fastest: "<re>" or "<re> <im">
//
// Lines starting with '#' and blank lines are ignored. Values are written
// with 17 significant digits so a write/read cycle is exact.

void write_form(std::ostream &out, RealForm const &T);
void write_form(std::ostream &out, ComplexForm const &T);
void write_form(std::ostream &out, AnyForm const &T);
AnyForm read_form(std::istream &in);

void save_form(std::filesystem::path const &path, AnyForm const &T);
AnyForm load_form(std::filesystem::path const &path);

Field field_of_form(AnyForm const &T);

} // namespace hl
