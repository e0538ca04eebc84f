#include "hl/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace hl {

namespace {

// Godfrey's coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs{
  0.99999999999980993227684700473478,
  676.520368121885098567009190444019,
  -1259.13921672240287047156078755283,
  771.3234287776530788486528258894,
  -176.61502916214059906584551354,
  12.507343278686904814458936853,
  -0.13857109526572011689554706,
  9.984369578019570859563e-6,
  1.50563273514931155834e-7};

double lanczos(double x)
{
  // Gamma(x) for x >= 0.5, written as Gamma(z+1) with z = x - 1.
  double const z = x - 1.0;
  double sum = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
    sum += kLanczosCoeffs[i] / (z + static_cast<double>(i));
  }
  double const t = z + kLanczosG + 0.5;
  // Split the power so large arguments stay finite.
  double const half = std::pow(t, (z + 0.5) / 2.0);
  return std::sqrt(2.0 * std::numbers::pi) * half * (half * std::exp(-t)) * sum;
}

} // namespace

double gamma(double x)
{
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("gamma: argument must be a positive finite real");
  }
  if (x < 0.5) {
    return lanczos(x + 1.0) / x;
  }
  return lanczos(x);
}

double solve_q0()
{
  double const target = std::sqrt(std::numbers::pi) / 2.0;
  auto residual = [target](double q) { return gamma((q + 1.0) / 2.0) - target; };

  double lo = 1.8;
  double hi = 1.9;
  double flo = residual(lo);
  double fhi = residual(hi);
  if (!(flo * fhi < 0.0)) {
    throw ConvergenceError("solve_q0: bracket (1.8, 1.9) does not straddle the root");
  }

  for (int iter = 0; iter < 200 && hi - lo > 1e-15; ++iter) {
    double const mid = 0.5 * (lo + hi);
    double const fmid = residual(mid);
    if (fmid == 0.0) {
      return mid;
    }
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
      fhi = fmid;
    }
  }

  // Secant step across the final bracket, kept only if it improves the residual.
  double best = std::abs(flo) < std::abs(fhi) ? lo : hi;
  if (fhi != flo) {
    double const secant = lo - flo * (hi - lo) / (fhi - flo);
    if (secant >= lo && secant <= hi && std::abs(residual(secant)) <= std::abs(residual(best))) {
      best = secant;
    }
  }
  if (std::abs(residual(best)) > 1e-12) {
    throw ConvergenceError("solve_q0: residual above 1e-12");
  }
  return best;
}

double q0()
{
  static double const value = solve_q0();
  return value;
}

} // namespace hl
