#pragma once

#include <stdexcept>

namespace hl {

struct DomainError : std::domain_error
{
  using std::domain_error::domain_error;
};

struct ConvergenceError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

/// Gamma function for x > 0 (Lanczos, g = 7, nine terms).
/// Relative error is below 1e-13 on (0, 50]. Throws DomainError for x <= 0.
double gamma(double x);

/// Unique q0 in (0,2) with Gamma((q0+1)/2) = sqrt(pi)/2, the switch point
/// between the two branches of the real Khinchin constant. Searched in the
/// bracket (1.8, 1.9) by bisection with a secant polish.
/// Throws ConvergenceError if the bracket does not straddle a root.
double solve_q0();

/// solve_q0() memoized behind a once-only initializer.
double q0();

} // namespace hl
