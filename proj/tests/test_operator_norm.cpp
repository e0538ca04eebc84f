#include "hl/operator_norm.hpp"
#include "hl/random.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

using namespace hl;
using cd = std::complex<double>;

namespace {

ExtendedReal const kInf = ExtendedReal::infinity();

RealForm from_list(int m, int n, std::vector<double> const &c)
{
  return RealForm(m, n, Eigen::Map<Eigen::VectorXd const>(c.data(), static_cast<Index>(c.size())));
}

RealForm diagonal(int m, int n)
{
  RealForm::Vector c = RealForm::Vector::Zero(checked_power(n, m));
  for (int i = 0; i < n; ++i) {
    c[RealForm(m, n).linear_index(std::vector<int>(m, i))] = 1.0;
  }
  return RealForm(m, n, c);
}

// Direct brute-force sup over sign vectors of every slot.
double brute_sign_norm(RealForm const &T)
{
  int const m = T.order();
  int const n = T.dim();
  int const bits = m * n;
  double best = 0.0;
  for (long mask = 0; mask < (1L << bits); ++mask) {
    double total = 0.0;
    std::vector<int> idx(m, 0);
    for (Index lin = 0; lin < T.size(); ++lin) {
      double term = T.coefficients()[lin];
      for (int k = 0; k < m; ++k) {
        term *= ((mask >> (k * n + idx[k])) & 1) ? -1.0 : 1.0;
      }
      total += term;
      for (int k = m - 1; k >= 0; --k) {
        if (++idx[k] < n) {
          break;
        }
        idx[k] = 0;
      }
    }
    best = std::max(best, std::abs(total));
  }
  return best;
}

// Dense angular sweep of the real 2x2 bilinear case on l_p spheres.
double angular_grid_bilinear(RealForm const &T, double p, int steps)
{
  auto point = [p](double t) {
    Eigen::Vector2d v(std::cos(t), std::sin(t));
    return Eigen::Vector2d(v / std::pow(std::pow(std::abs(v[0]), p) + std::pow(std::abs(v[1]), p), 1.0 / p));
  };
  double best = 0.0;
  for (int i = 0; i < steps; ++i) {
    Eigen::Vector2d const x = point(std::numbers::pi * i / steps);
    for (int j = 0; j < steps; ++j) {
      Eigen::Vector2d const y = point(std::numbers::pi * j / steps);
      double v = 0.0;
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          v += T.coefficient(std::vector<int>{a, b}) * x[a] * y[b];
        }
      }
      best = std::max(best, std::abs(v));
    }
  }
  return best;
}

} // namespace

TEST_CASE("oracle names round trip")
{
  for (auto o : {NormOracle::AlternatingAscent, NormOracle::SignEnumeration, NormOracle::GridSearch}) {
    CHECK(parse_norm_oracle(to_string(o)) == o);
  }
  CHECK_THROWS(parse_norm_oracle("bogus"));
}

TEST_CASE("holder maximizer attains the dual norm")
{
  Eigen::VectorXd g(3);
  g << 3.0, -4.0, 0.0;
  Eigen::VectorXd x;
  CHECK(holder_maximizer<double>(g, 2.0, x) == doctest::Approx(5.0));
  CHECK(x.dot(g) == doctest::Approx(5.0));
  CHECK(x.norm() == doctest::Approx(1.0));
  CHECK(holder_maximizer<double>(g, INFINITY, x) == doctest::Approx(7.0));
  CHECK(x.cwiseAbs().maxCoeff() == 1.0);
  CHECK(holder_maximizer<double>(g, 1.0, x) == doctest::Approx(4.0));
  CHECK(x.cwiseAbs().sum() == doctest::Approx(1.0));
  double const p = 3.0;
  double const v = holder_maximizer<double>(g, p, x);
  CHECK(v == doctest::Approx(lp_norm<double>(g, p / (p - 1.0))));
  CHECK(lp_norm<double>(x, p) == doctest::Approx(1.0));
  CHECK(x.dot(g) == doctest::Approx(v));

  ComplexForm::Vector gc(2);
  gc << cd(0, 1), cd(1, 1);
  ComplexForm::Vector xc;
  double const vc = holder_maximizer<cd>(gc, INFINITY, xc);
  CHECK(vc == doctest::Approx(1.0 + std::sqrt(2.0)));
  CHECK(std::abs((gc.array() * xc.array()).sum() - vc) < 1e-12);
}

TEST_CASE("diagonal forms")
{
  for (int n : {1, 2, 3, 5}) {
    AscentOptions o;
    o.restarts = 8;
    CHECK(operator_norm_ascent(diagonal(2, n), kInf, o).value == doctest::Approx(n));
    CHECK(operator_norm_sign_enumeration(diagonal(2, n)) == n);
  }
  auto const D = diagonal(2, 2);
  double const grid = angular_grid_bilinear(D, 4.0, 720);
  double const ascent = operator_norm_ascent(D, ExtendedReal(4), {}).value;
  CHECK(ascent == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
  CHECK(grid <= ascent + 1e-12);
  CHECK(grid == doctest::Approx(ascent).epsilon(1e-4));
  CHECK(operator_norm_grid(D, ExtendedReal(4)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("Littlewood and all-ones forms at p = inf")
{
  auto const L = from_list(2, 2, {1, 1, 1, -1});
  auto const J = from_list(2, 2, {1, 1, 1, 1});
  CHECK(operator_norm_sign_enumeration(L) == 2.0);
  CHECK(operator_norm_sign_enumeration(J) == 4.0);
  CHECK(operator_norm_ascent(L, kInf).value == doctest::Approx(2.0));
  CHECK(operator_norm_ascent(J, kInf).value == doctest::Approx(4.0));
  auto const cert = operator_norm_exact_small(L, kInf);
  CHECK(cert.exact);
  CHECK(cert.oracle == NormOracle::SignEnumeration);
  CHECK(cert.value == 2.0);
}

TEST_CASE("sign enumeration matches brute force on every +-1 form of shape 2x2 and 2x2x2")
{
  for (int m : {2, 3}) {
    int const size = 1 << m;
    for (int mask = 0; mask < (1 << size); ++mask) {
      std::vector<double> c(size);
      for (int i = 0; i < size; ++i) {
        c[i] = ((mask >> i) & 1) ? -1.0 : 1.0;
      }
      auto const T = from_list(m, 2, c);
      double const exact = operator_norm_sign_enumeration(T);
      CHECK(exact == brute_sign_norm(T));
      AscentOptions o;
      o.restarts = 16;
      o.seed = static_cast<std::uint64_t>(mask);
      double const est = operator_norm_ascent(T, kInf, o).value;
      CHECK(est <= exact + 1e-12);
      CHECK(est == doctest::Approx(exact));
    }
  }
}

TEST_CASE("sign enumeration matches brute force on gaussian forms")
{
  Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    int const m = 2 + trial % 2;
    int const n = 3;
    RealForm::Vector c(checked_power(n, m));
    for (Index i = 0; i < c.size(); ++i) {
      c[i] = standard_normal<double>(rng);
    }
    RealForm const T(m, n, c);
    double const exact = operator_norm_sign_enumeration(T);
    CHECK(exact == doctest::Approx(brute_sign_norm(T)).epsilon(1e-13));
    CHECK(operator_norm_ascent(T, kInf).value <= exact * (1 + 1e-12));
  }
}

TEST_CASE("sign enumeration guard")
{
  CHECK(sign_enumeration_feasible(2, 20));
  CHECK_FALSE(sign_enumeration_feasible(2, 21));
  CHECK(sign_enumeration_feasible(3, 10));
  CHECK_FALSE(sign_enumeration_feasible(3, 11));
  CHECK_THROWS_AS(operator_norm_sign_enumeration(RealForm(2, 21)), SizeGuardError);
}

TEST_CASE("ascent traces are monotone")
{
  Rng rng(21);
  ComplexForm::Vector c(27);
  for (Index i = 0; i < c.size(); ++i) {
    c[i] = standard_normal<cd>(rng);
  }
  ComplexForm const T(3, 3, c);
  AscentOptions o;
  o.restarts = 6;
  o.record_trace = true;
  for (auto const &p : {ExtendedReal(6), ExtendedReal(Rational(9, 2)), kInf}) {
    auto const r = operator_norm_ascent(T, p, o);
    CHECK(r.monotone);
    REQUIRE(r.traces.size() == 6);
    for (auto const &trace : r.traces) {
      for (std::size_t i = 1; i < trace.size(); ++i) {
        CHECK(trace[i] >= trace[i - 1] * (1 - 1e-12));
      }
    }
  }
}

TEST_CASE("ascent is deterministic and thread independent")
{
  Rng rng(8);
  RealForm::Vector c(64);
  for (Index i = 0; i < c.size(); ++i) {
    c[i] = standard_normal<double>(rng);
  }
  RealForm const T(3, 4, c);
  AscentOptions o;
  o.restarts = 12;
  o.seed = 99;
  auto const a = operator_norm_ascent(T, ExtendedReal(7), o);
  auto const b = operator_norm_ascent(T, ExtendedReal(7), o);
  o.threads = 3;
  auto const d = operator_norm_ascent(T, ExtendedReal(7), o);
  CHECK(a.value == b.value);
  CHECK(a.value == d.value);
  CHECK(a.restarts == 12);
}

TEST_CASE("complex forms")
{
  ComplexForm::Vector c(4);
  c << cd(1, 0), cd(0, 1), cd(0, 1), cd(1, 0);
  ComplexForm const T(2, 2, c);
  double const est = operator_norm_ascent(T, kInf).value;
  CHECK(est == doctest::Approx(2.0 * std::sqrt(2.0)));
  auto const grid = operator_norm_exact_small(T, kInf);
  CHECK_FALSE(grid.exact);
  CHECK(grid.value == doctest::Approx(est).epsilon(1e-8));
}

TEST_CASE("zero form and degenerate restarts")
{
  auto const r = operator_norm_ascent(RealForm(2, 3), kInf);
  CHECK(r.value == 0.0);
  CHECK(r.all_degenerate());
  CHECK(operator_norm_sign_enumeration(RealForm(2, 3)) == 0.0);
  AscentOptions bad;
  bad.restarts = 0;
  CHECK_THROWS(operator_norm_ascent(diagonal(2, 2), kInf, bad));
  CHECK_THROWS(operator_norm_ascent(diagonal(2, 2), ExtendedReal(Rational(1, 2))));
}
