#pragma once

#include "hl/field.hpp"
#include "hl/rational.hpp"

#include <string>
#include <vector>

namespace hl {

struct HLParams
{
  int m = 2;
  ExtendedReal p = ExtendedReal::infinity();
  Field field = Field::Real;

  /// Throws DomainError unless m >= 2 and 2m <= p.
  void validate() const;
};

/// rho = 2mp/(mp + p - 2m), and 2m/(m+1) at p = inf.
Rational hl_exponent_exact(int m, ExtendedReal const &p);
double hl_exponent(int m, ExtendedReal const &p);

/// Exponent bookkeeping for one (m, p). T is Rational (exact) or double.
/// lambda holds lambda_0 ... lambda_m.
template <typename T>
struct BasicExponentLadder
{
  int m = 0;
  ExtendedReal p;
  T rho{};
  T s{};
  std::vector<T> lambda;
  T theta1{};
  T theta2{};

  T const &lambda0() const { return lambda.front(); }
};

using ExponentLadder = BasicExponentLadder<Rational>;

template <typename T>
BasicExponentLadder<T> build_ladder_as(HLParams const &params);

/// Exact ladder.
ExponentLadder build_ladder(HLParams const &params);

/// Floating-point image of an exact ladder.
BasicExponentLadder<double> to_double(ExponentLadder const &ladder);

struct IdentityCheck
{
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  explicit operator bool() const { return ok(); }
};

/// 1/lambda_0 = theta1 + theta2 (m+1)/(2m), 1/s = theta1/2 + theta2 (m+1)/(2m),
/// theta1 + theta2 = 1. Exact for Rational, 1e-12 for double.
template <typename T>
IdentityCheck check_interpolation(BasicExponentLadder<T> const &ladder, int m);

/// Everything else the ladder promises: lambda_m = s, the conjugate chain
/// (p/lambda_j)* = lambda_{j+1}/lambda_j, theta1 = 2m/p, theta2 = (p-2m)/p,
/// lambda_0 <= s <= 2, and strict growth of lambda_j for 2m < p < inf.
template <typename T>
IdentityCheck check_ladder_identities(BasicExponentLadder<T> const &ladder);

} // namespace hl
