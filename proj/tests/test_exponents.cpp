#include "hl/exponents.hpp"
#include "hl/special_functions.hpp"

#include <doctest.h>

#include <cmath>

using namespace hl;

namespace {

HLParams params(int m, ExtendedReal p) { return HLParams{m, std::move(p), Field::Real}; }

} // namespace

TEST_CASE("hl_exponent")
{
  CHECK(hl_exponent_exact(2, 4) == 2);
  CHECK(hl_exponent_exact(2, ExtendedReal::infinity()) == Rational(4, 3));
  CHECK(hl_exponent_exact(3, 12) == Rational(12, 7));
  CHECK(hl_exponent(3, 12) == doctest::Approx(12.0 / 7.0));
  CHECK_THROWS_AS(hl_exponent(2, 3), DomainError);
}

TEST_CASE("ladder for m = 2, p = 8")
{
  auto const ladder = build_ladder(params(2, 8));
  CHECK(ladder.s == Rational(8, 5));
  REQUIRE(ladder.lambda.size() == 3);
  CHECK(ladder.lambda[0] == Rational(8, 7));
  CHECK(ladder.lambda[1] == Rational(4, 3));
  CHECK(ladder.lambda[2] == Rational(8, 5));
  CHECK(ladder.lambda[2] == ladder.s);
  CHECK(ladder.theta1 == Rational(1, 2));
  CHECK(ladder.theta2 == Rational(1, 2));
}

TEST_CASE("ladder for m = 2, p = inf")
{
  auto const ladder = build_ladder(params(2, ExtendedReal::infinity()));
  CHECK(ladder.s == Rational(4, 3));
  for (auto const &l : ladder.lambda) {
    CHECK(l == Rational(4, 3));
  }
  CHECK(ladder.theta1 == 0);
  CHECK(ladder.theta2 == 1);
}

TEST_CASE("ladder for m = 3, p = 6")
{
  auto const ladder = build_ladder(params(3, 6));
  CHECK(ladder.s == 2);
  CHECK(ladder.lambda0() == 1);
  CHECK(ladder.lambda[3] == 2);
  CHECK(ladder.theta1 == 1);
  CHECK(ladder.theta2 == 0);
}

TEST_CASE("ladder rejects p < 2m")
{
  CHECK_THROWS_AS(build_ladder(params(3, 5)), DomainError);
  CHECK_THROWS_AS(build_ladder(params(1, 10)), DomainError);
}

TEST_CASE("check_interpolation examples")
{
  CHECK(check_interpolation(build_ladder(params(2, 8)), 2));
  CHECK(check_interpolation(build_ladder(params(2, ExtendedReal::infinity())), 2));

  auto perturbed = build_ladder(params(2, 8));
  perturbed.theta1 += Rational(1, 1000);
  auto const result = check_interpolation(perturbed, 2);
  CHECK_FALSE(result.ok());
  CHECK(result.failures.size() >= 2);

  auto perturbed_f = to_double(build_ladder(params(2, 8)));
  perturbed_f.theta1 += 1e-3;
  CHECK_FALSE(check_interpolation(perturbed_f, 2).ok());
}

TEST_CASE("exact ladder identities over a rational grid")
{
  for (int m = 2; m <= 10; ++m) {
    for (int num = 4 * m; num <= 120; num += 3) {
      // p = num/2 covers integers and half-integers at or above 2m.
      ExtendedReal const p(Rational(num, 2));
      auto const ladder = build_ladder(params(m, p));
      auto const identities = check_ladder_identities(ladder);
      CHECK_MESSAGE(identities.ok(), "m=", m, " p=", p.to_string());
      CHECK(check_interpolation(ladder, m).ok());
      CHECK(ladder.lambda.back() == ladder.s);
    }
  }
}

TEST_CASE("double ladder agrees with the exact ladder")
{
  for (int m = 2; m <= 10; ++m) {
    for (int p = 2 * m; p <= 60; ++p) {
      auto const exact = to_double(build_ladder(params(m, p)));
      auto const floating = build_ladder_as<double>(params(m, p));
      CHECK(check_ladder_identities(floating).ok());
      CHECK(check_interpolation(floating, m).ok());
      for (int j = 0; j <= m; ++j) {
        CHECK(std::abs(exact.lambda[j] - floating.lambda[j]) <= 1e-12);
      }
      CHECK(std::abs(floating.lambda.back() - floating.s) <= 1e-12);
    }
  }
}

TEST_CASE("lambda_0 <= s <= 2 and theta weights on the domain edges")
{
  for (int m = 2; m <= 10; ++m) {
    auto const at_2m = build_ladder(params(m, 2 * m));
    CHECK(at_2m.s == 2);
    CHECK(at_2m.lambda0() == 1);
    CHECK(at_2m.theta1 == 1);
    auto const at_inf = build_ladder(params(m, ExtendedReal::infinity()));
    CHECK(at_inf.lambda0() == at_inf.s);
    CHECK(at_inf.s == Rational(2 * m, m + 1));
    CHECK(check_ladder_identities(at_inf).ok());
    CHECK(check_interpolation(at_inf, m).ok());
  }
}
