#include "hl/multilinear.hpp"
#include "hl/random.hpp"
#include "hl/special_functions.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

using namespace hl;
using cd = std::complex<double>;

namespace {

RealForm littlewood()
{
  Eigen::VectorXd c(4);
  c << 1, 1, 1, -1;
  return RealForm(2, 2, c);
}

// Direct sum over all multi-indices.
template <typename Scalar>
Scalar brute_evaluate(MultilinearForm<Scalar> const &T, std::vector<Vec<Scalar>> const &xs)
{
  int const m = T.order();
  int const n = T.dim();
  std::vector<int> idx(m, 0);
  Scalar total{0};
  for (Index lin = 0; lin < T.size(); ++lin) {
    Scalar term = T.coefficients()[lin];
    for (int k = 0; k < m; ++k) {
      term *= xs[k][idx[k]];
    }
    total += term;
    for (int k = m - 1; k >= 0; --k) {
      if (++idx[k] < n) {
        break;
      }
      idx[k] = 0;
    }
  }
  return total;
}

template <typename Scalar>
MultilinearForm<Scalar> gaussian_form(int m, int n, Rng &rng)
{
  Vec<Scalar> c(checked_power(n, m));
  for (Index i = 0; i < c.size(); ++i) {
    c[i] = standard_normal<Scalar>(rng);
  }
  return MultilinearForm<Scalar>(m, n, c);
}

template <typename Scalar>
std::vector<Vec<Scalar>> gaussian_vectors(int m, int n, Rng &rng)
{
  std::vector<Vec<Scalar>> xs;
  for (int k = 0; k < m; ++k) {
    Vec<Scalar> x(n);
    for (int i = 0; i < n; ++i) {
      x[i] = standard_normal<Scalar>(rng);
    }
    xs.push_back(x);
  }
  return xs;
}

} // namespace

TEST_CASE("construction and indexing")
{
  RealForm const zero(3, 2);
  CHECK(zero.size() == 8);
  CHECK(zero.is_zero());
  auto const L = littlewood();
  CHECK(L.coefficient(std::vector<int>{1, 1}) == -1.0);
  CHECK(L.linear_index(std::vector<int>{1, 0}) == 2);
  CHECK_THROWS_AS(L.coefficient(std::vector<int>{2, 0}), DimensionError);
  CHECK_THROWS_AS(RealForm(2, 2, Eigen::VectorXd::Ones(3)), DimensionError);
  CHECK_THROWS_AS(RealForm(8, 10), SizeGuardError);
  Eigen::VectorXd bad = Eigen::VectorXd::Ones(4);
  bad[2] = std::nan("");
  CHECK_THROWS_AS(RealForm(2, 2, bad), DomainError);
}

TEST_CASE("evaluate examples")
{
  RealForm::Vector c = RealForm::Vector::Zero(8);
  c[0] = 1.0;
  RealForm const single(3, 2, c);
  std::vector<Eigen::VectorXd> e1(3, Eigen::VectorXd::Unit(2, 0));
  CHECK(evaluate(single, std::span<Eigen::VectorXd const>(e1)) == 1.0);

  auto const L = littlewood();
  std::vector<Eigen::VectorXd> ones{Eigen::Vector2d(1, 1), Eigen::Vector2d(1, 1)};
  CHECK(evaluate(L, std::span<Eigen::VectorXd const>(ones)) == 2.0);
  std::vector<Eigen::VectorXd> mixed{Eigen::Vector2d(1, 1), Eigen::Vector2d(1, -1)};
  CHECK(evaluate(L, std::span<Eigen::VectorXd const>(mixed)) == brute_evaluate(L, mixed));
  CHECK(evaluate(L, std::span<Eigen::VectorXd const>(mixed)) == 2.0);

  std::vector<Eigen::VectorXd> short_vec{Eigen::Vector2d(1, 1), Eigen::Vector3d(1, 1, 1)};
  CHECK_THROWS_AS(evaluate(L, std::span<Eigen::VectorXd const>(short_vec)), DimensionError);
}

TEST_CASE_TEMPLATE("evaluate matches brute force and is multilinear", Scalar, double, cd)
{
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int const m = 1 + trial % 4;
    int const n = 1 + trial % 3 + (trial / 7) % 2;
    auto const T = gaussian_form<Scalar>(m, n, rng);
    auto xs = gaussian_vectors<Scalar>(m, n, rng);
    Scalar const v = evaluate(T, std::span<Vec<Scalar> const>(xs));
    CHECK(std::abs(v - brute_evaluate(T, xs)) <= 1e-12 * (1.0 + std::abs(v)));

    // Linearity in a random slot.
    int const slot = trial % m;
    auto ys = xs;
    Vec<Scalar> const other = gaussian_vectors<Scalar>(1, n, rng).front();
    Scalar const a = standard_normal<Scalar>(rng);
    ys[slot] = a * xs[slot] + other;
    auto zs = xs;
    zs[slot] = other;
    Scalar const lhs = evaluate(T, std::span<Vec<Scalar> const>(ys));
    Scalar const rhs = a * v + evaluate(T, std::span<Vec<Scalar> const>(zs));
    CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + std::abs(lhs)));

    // Zero vector in any slot.
    zs[slot].setZero();
    CHECK(std::abs(evaluate(T, std::span<Vec<Scalar> const>(zs))) == 0.0);

    // contract_except gives the functional of the free slot.
    Vec<Scalar> const g = contract_except(T, std::span<Vec<Scalar> const>(xs), slot);
    Scalar const via_g = (g.array() * xs[slot].array()).sum();
    CHECK(std::abs(via_g - v) <= 1e-12 * (1.0 + std::abs(v)));
  }
}

TEST_CASE("mixed_norm examples")
{
  auto const L = littlewood();
  CHECK(mixed_norm(L, 4.0 / 3.0) == doctest::Approx(std::pow(2.0, 1.5)).epsilon(1e-14));
  Eigen::VectorXd d(4);
  d << 1, 0, 0, 1;
  CHECK(mixed_norm(RealForm(2, 2, d), 2.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(mixed_norm(RealForm(3, 3), 1.5) == 0.0);
  CHECK(mixed_norm(L, INFINITY) == 1.0);
  CHECK_THROWS_AS(mixed_norm(L, 0.5), DomainError);
}

TEST_CASE("anisotropic_mixed_norm examples")
{
  auto const L = littlewood();
  CHECK(anisotropic_mixed_norm(L, 0, 1.0, 2.0) == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-14));
  for (double rho : {1.0, 4.0 / 3.0, 2.0, 3.5}) {
    for (int slot = 0; slot < 2; ++slot) {
      CHECK(anisotropic_mixed_norm(L, slot, rho, rho) == doctest::Approx(mixed_norm(L, rho)).epsilon(1e-14));
    }
  }
  ComplexForm::Vector c = ComplexForm::Vector::Zero(27);
  c[13] = cd(3.0, -4.0);
  ComplexForm const single(3, 3, c);
  for (int slot = 0; slot < 3; ++slot) {
    CHECK(anisotropic_mixed_norm(single, slot, 1.0, 2.0) == doctest::Approx(5.0));
    CHECK(anisotropic_mixed_norm(single, slot, 1.7, 1.2) == doctest::Approx(5.0));
  }
  CHECK_THROWS_AS(anisotropic_mixed_norm(L, 2, 1.0, 1.0), DimensionError);
}

TEST_CASE("anisotropic_mixed_norm matches a direct computation")
{
  Rng rng(5);
  auto const T = gaussian_form<double>(3, 3, rng);
  double const outer = 1.3;
  double const inner = 2.7;
  for (int slot = 0; slot < 3; ++slot) {
    std::vector<double> inner_sums(3, 0.0);
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        for (int c = 0; c < 3; ++c) {
          int const idx[3] = {a, b, c};
          inner_sums[idx[slot]] += std::pow(std::abs(T.coefficient(std::vector<int>{a, b, c})), inner);
        }
      }
    }
    double outer_sum = 0.0;
    for (double s : inner_sums) {
      outer_sum += std::pow(std::pow(s, 1.0 / inner), outer);
    }
    CHECK(anisotropic_mixed_norm(T, slot, outer, inner) == doctest::Approx(std::pow(outer_sum, 1.0 / outer)).epsilon(1e-13));
  }
}

TEST_CASE("slot permutation preserves mixed norms and values")
{
  Rng rng(9);
  auto const T = gaussian_form<cd>(3, 2, rng);
  std::vector<int> const perm{2, 0, 1};
  auto const P = T.permuted(perm);
  CHECK(mixed_norm(P, 1.5) == doctest::Approx(mixed_norm(T, 1.5)).epsilon(1e-14));
  auto const xs = gaussian_vectors<cd>(3, 2, rng);
  std::vector<ComplexForm::Vector> ys(3);
  for (int k = 0; k < 3; ++k) {
    ys[k] = xs[perm[k]];
  }
  cd const a = evaluate(T, std::span<ComplexForm::Vector const>(xs));
  cd const b = evaluate(P, std::span<ComplexForm::Vector const>(ys));
  CHECK(std::abs(a - b) < 1e-12);
  CHECK_THROWS_AS(T.permuted(std::vector<int>{0, 0, 1}), DimensionError);
}

TEST_CASE("scaling multiplies mixed norms by |c|")
{
  auto const L = littlewood();
  CHECK(mixed_norm(L.scaled(-3.0), 4.0 / 3.0) == doctest::Approx(3.0 * mixed_norm(L, 4.0 / 3.0)));
}

TEST_CASE("lp_norm")
{
  Eigen::VectorXd x(3);
  x << 3, -4, 0;
  CHECK(lp_norm<double>(x, 2.0) == doctest::Approx(5.0));
  CHECK(lp_norm<double>(x, 1.0) == doctest::Approx(7.0));
  CHECK(lp_norm<double>(x, INFINITY) == 4.0);
}
