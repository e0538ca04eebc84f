#include "hl/constants.hpp"
#include "hl/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hl {

std::string_view to_string(Field f) { return f == Field::Real ? "real" : "complex"; }

Field parse_field(std::string_view text)
{
  if (text == "real" || text == "R") {
    return Field::Real;
  }
  if (text == "complex" || text == "C") {
    return Field::Complex;
  }
  throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected real|complex)");
}

namespace {

double const kSqrtPi = std::sqrt(std::numbers::pi);

// Exponents 2m(m-1)/p and (p-2m)/p with their p = inf limits.
struct InterpolationWeights
{
  double small_exponent;
  double bh_exponent;
};

InterpolationWeights weights(int m, ExtendedReal const &p)
{
  if (p.is_infinite()) {
    return {0.0, 1.0};
  }
  Rational const &pv = p.rational();
  Rational const first = Rational(2 * m * (m - 1)) / pv;
  Rational const second = (pv - 2 * m) / pv;
  return {to_double(first), to_double(second)};
}

double base_constant(Field field) { return field == Field::Real ? std::numbers::sqrt2 : 2.0 / kSqrtPi; }

} // namespace

void require_hl_domain(int m, ExtendedReal const &p)
{
  if (m < 2) {
    throw DomainError("m must be >= 2");
  }
  if (p < ExtendedReal(2 * m)) {
    throw DomainError("p must satisfy 2m <= p <= inf (got m = " + std::to_string(m) + ", p = " + p.to_string() + ")");
  }
}

double khinchin_A(double q, Field field)
{
  if (!(q > 0.0 && q <= 2.0)) {
    throw DomainError("khinchin_A: q must lie in (0, 2]");
  }
  if (field == Field::Complex) {
    return std::pow(gamma((q + 2.0) / 2.0), 1.0 / q);
  }
  if (q > q0()) {
    return std::numbers::sqrt2 * std::pow(gamma((q + 1.0) / 2.0) / kSqrtPi, 1.0 / q);
  }
  return std::pow(2.0, 0.5 - 1.0 / q);
}

double bh_upper_bound(int m, Field field)
{
  if (m < 1) {
    throw DomainError("bh_upper_bound: m must be >= 1");
  }
  double log_bound = 0.0;
  for (int j = 2; j <= m; ++j) {
    double const q = static_cast<double>(2 * j - 2) / static_cast<double>(j);
    log_bound -= std::log(khinchin_A(q, field));
  }
  return std::exp(log_bound);
}

double hl_upper_bound(int m, ExtendedReal const &p, Field field)
{
  require_hl_domain(m, p);
  auto const w = weights(m, p);
  return std::pow(base_constant(field), w.small_exponent) * std::pow(bh_upper_bound(m, field), w.bh_exponent);
}

double legacy_bound(int m)
{
  if (m < 1) {
    throw DomainError("legacy_bound: m must be >= 1");
  }
  return std::pow(std::numbers::sqrt2, static_cast<double>(m - 1));
}

Section3Value section3_evaluate(int m, ExtendedReal const &p, Field field)
{
  require_hl_domain(m, p);
  auto const w = weights(m, p);

  if (field == Field::Complex) {
    double log_product = 0.0;
    for (int j = 2; j <= m; ++j) {
      log_product += (static_cast<double>(j) / (2.0 - 2.0 * j)) * std::log(gamma(2.0 - 1.0 / j));
    }
    return {std::exp(w.small_exponent * std::log(2.0 / kSqrtPi) + w.bh_exponent * log_product), false};
  }

  if (m <= 13) {
    double log2_product = 0.0;
    for (int j = 2; j <= m; ++j) {
      log2_product += 1.0 / (2.0 * j - 2.0);
    }
    return {std::exp((0.5 * w.small_exponent + w.bh_exponent * log2_product) * std::numbers::ln2), false};
  }

  if (!p.is_infinite() && p.rational() == 2 * m) {
    return {hl_upper_bound(m, p, field), true};
  }

  // 2^{(4m^2 - pm - 2m)/(2p - 4m) + 446381/55440}, exact in p; limit -m/2 at p = inf.
  Rational const offset(446381, 55440);
  Rational two_exponent;
  if (p.is_infinite()) {
    two_exponent = Rational(-m, 2) + offset;
  } else {
    Rational const &pv = p.rational();
    two_exponent = (Rational(4 * m * m) - pv * m - 2 * m) / (2 * pv - 4 * m) + offset;
  }
  double log_inner = to_double(two_exponent) * std::numbers::ln2;
  for (int j = 14; j <= m; ++j) {
    log_inner += (static_cast<double>(j) / (2.0 - 2.0 * j)) * std::log(gamma(1.5 - 1.0 / j) / kSqrtPi);
  }
  return {std::exp(w.bh_exponent * log_inner), false};
}

double section3_bound(int m, ExtendedReal const &p, Field field) { return section3_evaluate(m, p, field).value; }

double envelope_exponent(Field field)
{
  return field == Field::Real ? (2.0 - std::numbers::ln2 - kEulerGamma) / 2.0 : (1.0 - kEulerGamma) / 2.0;
}

double asymptotic_envelope(int m, Field field, double kappa)
{
  if (!(kappa > 0.0)) {
    throw DomainError("asymptotic_envelope: kappa must be positive");
  }
  return kappa * std::pow(static_cast<double>(m), envelope_exponent(field));
}

BoundReport bound_report(int m, ExtendedReal const &p, Field field, double kappa)
{
  BoundReport r;
  r.m = m;
  r.p = p;
  r.field = field;
  r.kappa = kappa;
  r.theorem1_bound = hl_upper_bound(m, p, field);
  auto const s3 = section3_evaluate(m, p, field);
  r.section3_bound = s3.value;
  r.section3_fallback = s3.singular_fallback;
  r.legacy_bound = legacy_bound(m);
  r.bh_bound = bh_upper_bound(m, field);
  r.asymptotic_envelope = asymptotic_envelope(m, field, kappa);
  return r;
}

} // namespace hl
