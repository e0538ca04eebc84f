#include "hl/exponents.hpp"
#include "hl/constants.hpp"
#include "hl/special_functions.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace hl {

void HLParams::validate() const { require_hl_domain(m, p); }

Rational hl_exponent_exact(int m, ExtendedReal const &p)
{
  require_hl_domain(m, p);
  if (p.is_infinite()) {
    return Rational(2 * m, m + 1);
  }
  Rational const &pv = p.rational();
  return (2 * m * pv) / (m * pv + pv - 2 * m);
}

double hl_exponent(int m, ExtendedReal const &p) { return to_double(hl_exponent_exact(m, p)); }

namespace {

template <typename T>
T from_rational(Rational const &r);

template <>
Rational from_rational<Rational>(Rational const &r)
{
  return r;
}

template <>
double from_rational<double>(Rational const &r)
{
  return to_double(r);
}

template <typename T>
bool same(T const &a, T const &b)
{
  if constexpr (std::is_same_v<T, double>) {
    return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
  } else {
    return a == b;
  }
}

template <typename T>
std::string show(T const &v)
{
  if constexpr (std::is_same_v<T, double>) {
    return fmt::format("{:.17g}", v);
  } else {
    return to_string(v);
  }
}

} // namespace

template <typename T>
BasicExponentLadder<T> build_ladder_as(HLParams const &params)
{
  params.validate();
  int const m = params.m;
  BasicExponentLadder<T> ladder;
  ladder.m = m;
  ladder.p = params.p;
  ladder.rho = from_rational<T>(hl_exponent_exact(m, params.p));
  ladder.s = ladder.rho;

  T const s = ladder.s;
  T const lambda0 = T(2) * s / (T(m) * s + s - T(2 * m) + T(2));
  ladder.lambda.reserve(m + 1);
  for (int j = 0; j <= m; ++j) {
    if (params.p.is_infinite()) {
      ladder.lambda.push_back(lambda0);
    } else {
      T const p = from_rational<T>(params.p.rational());
      ladder.lambda.push_back(lambda0 * p / (p - lambda0 * T(j)));
    }
  }
  ladder.theta1 = T(2) * (T(1) / lambda0 - T(1) / s);
  ladder.theta2 = T(m) * (T(2) / s - T(1));
  return ladder;
}

template BasicExponentLadder<Rational> build_ladder_as<Rational>(HLParams const &);
template BasicExponentLadder<double> build_ladder_as<double>(HLParams const &);

ExponentLadder build_ladder(HLParams const &params) { return build_ladder_as<Rational>(params); }

BasicExponentLadder<double> to_double(ExponentLadder const &ladder)
{
  BasicExponentLadder<double> out;
  out.m = ladder.m;
  out.p = ladder.p;
  out.rho = to_double(ladder.rho);
  out.s = to_double(ladder.s);
  for (auto const &l : ladder.lambda) {
    out.lambda.push_back(to_double(l));
  }
  out.theta1 = to_double(ladder.theta1);
  out.theta2 = to_double(ladder.theta2);
  return out;
}

template <typename T>
IdentityCheck check_interpolation(BasicExponentLadder<T> const &ladder, int m)
{
  IdentityCheck check;
  if (ladder.lambda.empty()) {
    check.failures.push_back("ladder is empty");
    return check;
  }
  T const bh_reciprocal = T(m + 1) / T(2 * m);
  T const lhs0 = T(1) / ladder.lambda0();
  T const rhs0 = ladder.theta1 + ladder.theta2 * bh_reciprocal;
  if (!same(lhs0, rhs0)) {
    check.failures.push_back(fmt::format("1/lambda_0 = {} but theta1 + theta2(m+1)/(2m) = {}", show(lhs0), show(rhs0)));
  }
  T const lhs1 = T(1) / ladder.s;
  T const rhs1 = ladder.theta1 / T(2) + ladder.theta2 * bh_reciprocal;
  if (!same(lhs1, rhs1)) {
    check.failures.push_back(fmt::format("1/s = {} but theta1/2 + theta2(m+1)/(2m) = {}", show(lhs1), show(rhs1)));
  }
  T const total = ladder.theta1 + ladder.theta2;
  if (!same(total, T(1))) {
    check.failures.push_back(fmt::format("theta1 + theta2 = {}", show(total)));
  }
  return check;
}

template IdentityCheck check_interpolation<Rational>(BasicExponentLadder<Rational> const &, int);
template IdentityCheck check_interpolation<double>(BasicExponentLadder<double> const &, int);

template <typename T>
IdentityCheck check_ladder_identities(BasicExponentLadder<T> const &ladder)
{
  IdentityCheck check;
  int const m = ladder.m;
  if (static_cast<int>(ladder.lambda.size()) != m + 1) {
    check.failures.push_back("ladder must hold lambda_0 ... lambda_m");
    return check;
  }
  bool const infinite = ladder.p.is_infinite();

  if (!same(ladder.lambda.back(), ladder.s)) {
    check.failures.push_back(fmt::format("lambda_m = {} differs from s = {}", show(ladder.lambda.back()), show(ladder.s)));
  }

  for (int j = 0; j < m; ++j) {
    T const ratio = ladder.lambda[j + 1] / ladder.lambda[j];
    bool ok = false;
    if (infinite) {
      // (inf / lambda_j)* = 1
      ok = same(ratio, T(1));
    } else {
      T const p = from_rational<T>(ladder.p.rational());
      T const x = p / ladder.lambda[j];
      ok = x > T(1) && same(x / (x - T(1)), ratio);
    }
    if (!ok) {
      check.failures.push_back(fmt::format("conjugate identity fails at j = {}", j));
    }
  }

  T theta1_simple{0};
  T theta2_simple{1};
  if (!infinite) {
    T const p = from_rational<T>(ladder.p.rational());
    theta1_simple = T(2 * m) / p;
    theta2_simple = (p - T(2 * m)) / p;
  }
  if (!same(ladder.theta1, theta1_simple)) {
    check.failures.push_back(fmt::format("theta1 = {} but 2m/p = {}", show(ladder.theta1), show(theta1_simple)));
  }
  if (!same(ladder.theta2, theta2_simple)) {
    check.failures.push_back(fmt::format("theta2 = {} but (p-2m)/p = {}", show(ladder.theta2), show(theta2_simple)));
  }

  if (ladder.lambda0() > ladder.s && !same(ladder.lambda0(), ladder.s)) {
    check.failures.push_back("lambda_0 > s");
  }
  if (ladder.s > T(2) && !same(ladder.s, T(2))) {
    check.failures.push_back("s > 2");
  }

  bool const interior = !infinite && ladder.p.rational() > 2 * m;
  if (interior) {
    for (int j = 1; j <= m; ++j) {
      if (!(ladder.lambda[j - 1] < ladder.lambda[j])) {
        check.failures.push_back(fmt::format("lambda_{} >= lambda_{}", j - 1, j));
      }
    }
  }
  return check;
}

template IdentityCheck check_ladder_identities<Rational>(BasicExponentLadder<Rational> const &);
template IdentityCheck check_ladder_identities<double>(BasicExponentLadder<double> const &);

} // namespace hl
