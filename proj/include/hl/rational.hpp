#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>

namespace hl {

using Rational = boost::multiprecision::cpp_rational;

double to_double(Rational const &r);

/// "a/b" or "a"; always in lowest terms.
std::string to_string(Rational const &r);

/// An exponent in (0, +inf], held exactly: a rational or +inf.
class ExtendedReal
{
public:
  ExtendedReal() = default;
  ExtendedReal(long long v)
    : value_(v)
  {
  }
  ExtendedReal(Rational v)
    : value_(std::move(v))
  {
  }

  static ExtendedReal infinity()
  {
    ExtendedReal r;
    r.infinite_ = true;
    return r;
  }

  /// Accepts an integer, "a/b", a finite decimal ("7.25", "1e3") or "inf".
  /// Decimals are converted exactly. Throws std::invalid_argument.
  static ExtendedReal parse(std::string_view text);

  bool is_infinite() const { return infinite_; }
  /// Exact value; precondition: finite.
  Rational const &rational() const;
  double to_double() const;
  std::string to_string() const;

  friend bool operator==(ExtendedReal const &a, ExtendedReal const &b);
  friend std::partial_ordering operator<=>(ExtendedReal const &a, ExtendedReal const &b);

private:
  Rational value_{0};
  bool infinite_ = false;
};

/// Conjugate exponent x/(x-1) with 1* = inf and inf* = 1.
/// Throws DomainError for x < 1.
ExtendedReal conjugate(ExtendedReal const &x);
double conjugate(double x);

} // namespace hl
