#include "hl/rational.hpp"
#include "hl/special_functions.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hl {

namespace mp = boost::multiprecision;

double to_double(Rational const &r) { return r.convert_to<double>(); }

std::string to_string(Rational const &r)
{
  if (mp::denominator(r) == 1) {
    return mp::numerator(r).str();
  }
  return mp::numerator(r).str() + "/" + mp::denominator(r).str();
}

namespace {

bool all_digits(std::string_view s)
{
  if (s.empty()) {
    return false;
  }
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return true;
}

mp::cpp_int parse_integer(std::string_view s)
{
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  mp::cpp_int const v{std::string(s)};
  return negative ? mp::cpp_int(-v) : v;
}

Rational parse_decimal(std::string_view s)
{
  // [sign] digits [. digits] [e|E [sign] digits]
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    auto const exp_text = s.substr(e + 1);
    exponent = parse_integer(exp_text).convert_to<long long>();
    if (std::llabs(exponent) > 4000) {
      throw std::invalid_argument("exponent out of range");
    }
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto const whole = s.substr(0, dot);
    auto const frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw std::invalid_argument("malformed decimal");
    }
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long long>(frac.size());
  } else {
    if (!all_digits(s)) {
      throw std::invalid_argument("malformed number");
    }
    digits = std::string(s);
  }
  Rational r{mp::cpp_int(digits)};
  mp::cpp_int const scale = mp::pow(mp::cpp_int(10), static_cast<unsigned>(std::llabs(exponent)));
  r = exponent >= 0 ? Rational(r * scale) : Rational(r / scale);
  return negative ? Rational(-r) : r;
}

} // namespace

ExtendedReal ExtendedReal::parse(std::string_view text)
{
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (text == "inf" || text == "+inf" || text == "infinity" || text == "Inf" || text == "INF") {
    return infinity();
  }
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto const num = parse_integer(text.substr(0, slash));
    auto const den = parse_integer(text.substr(slash + 1));
    if (den == 0) {
      throw std::invalid_argument("zero denominator");
    }
    return ExtendedReal(Rational(num, den));
  }
  return ExtendedReal(parse_decimal(text));
}

Rational const &ExtendedReal::rational() const
{
  if (infinite_) {
    throw DomainError("ExtendedReal: infinite value has no rational representation");
  }
  return value_;
}

double ExtendedReal::to_double() const
{
  return infinite_ ? std::numeric_limits<double>::infinity() : hl::to_double(value_);
}

std::string ExtendedReal::to_string() const { return infinite_ ? "inf" : hl::to_string(value_); }

bool operator==(ExtendedReal const &a, ExtendedReal const &b)
{
  if (a.infinite_ || b.infinite_) {
    return a.infinite_ == b.infinite_;
  }
  return a.value_ == b.value_;
}

std::partial_ordering operator<=>(ExtendedReal const &a, ExtendedReal const &b)
{
  if (a.infinite_ || b.infinite_) {
    if (a.infinite_ == b.infinite_) {
      return std::partial_ordering::equivalent;
    }
    return a.infinite_ ? std::partial_ordering::greater : std::partial_ordering::less;
  }
  if (a.value_ < b.value_) {
    return std::partial_ordering::less;
  }
  if (b.value_ < a.value_) {
    return std::partial_ordering::greater;
  }
  return std::partial_ordering::equivalent;
}

ExtendedReal conjugate(ExtendedReal const &x)
{
  if (x.is_infinite()) {
    return ExtendedReal(1);
  }
  Rational const &v = x.rational();
  if (v < 1) {
    throw DomainError("conjugate exponent requires x >= 1");
  }
  if (v == 1) {
    return ExtendedReal::infinity();
  }
  return ExtendedReal(Rational(v / (v - 1)));
}

double conjugate(double x)
{
  if (std::isinf(x)) {
    return 1.0;
  }
  if (!(x >= 1.0)) {
    throw DomainError("conjugate exponent requires x >= 1");
  }
  if (x == 1.0) {
    return std::numeric_limits<double>::infinity();
  }
  return x / (x - 1.0);
}

} // namespace hl
