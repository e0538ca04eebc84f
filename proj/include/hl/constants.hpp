#pragma once

#include "hl/field.hpp"
#include "hl/rational.hpp"

namespace hl {

/// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

/// Optimal lower Khinchin constant A_q for q in (0, 2].
/// Real: Haagerup's constants, split at q0. Complex: Steinhaus constants
/// Gamma((q+2)/2)^{1/q}; the literature states them for 1 <= q < 2 and the
/// same formula is used on all of (0, 2].
double khinchin_A(double q, Field field);

/// Upper estimate prod_{j=2}^m A_{(2j-2)/j}^{-1} for the multilinear
/// Bohnenblust-Hille constant. Empty product (= 1) for m = 1.
double bh_upper_bound(int m, Field field);

/// Hardy-Littlewood bound a^{2m(m-1)/p} * B_m^{(p-2m)/p}, with a = sqrt2 (real)
/// or 2/sqrt(pi) (complex). Limits at p = inf are exponents 0 and 1.
double hl_upper_bound(int m, ExtendedReal const &p, Field field);

/// (sqrt2)^{m-1}.
double legacy_bound(int m);

struct Section3Value
{
  double value = 0;
  /// Set when the real m >= 14 display is singular (p = 2m) and the value
  /// came from the hl_upper_bound composition instead.
  bool singular_fallback = false;
};

/// The explicit closed forms: real 2 <= m <= 13, real m >= 14 (with the
/// 446381/55440 exponent), and complex, each evaluated as written.
Section3Value section3_evaluate(int m, ExtendedReal const &p, Field field);
double section3_bound(int m, ExtendedReal const &p, Field field);

double envelope_exponent(Field field);
/// kappa * m^{(2 - ln2 - gamma)/2} (real) or kappa * m^{(1 - gamma)/2} (complex).
double asymptotic_envelope(int m, Field field, double kappa = 1.0);

struct BoundReport
{
  int m = 0;
  ExtendedReal p;
  Field field = Field::Real;
  double theorem1_bound = 0;
  double section3_bound = 0;
  double legacy_bound = 0;
  double bh_bound = 0;
  double asymptotic_envelope = 0;
  double kappa = 1.0;
  bool section3_fallback = false;
};

BoundReport bound_report(int m, ExtendedReal const &p, Field field, double kappa = 1.0);

/// Throws DomainError unless m >= 2 and 2m <= p.
void require_hl_domain(int m, ExtendedReal const &p);

} // namespace hl
