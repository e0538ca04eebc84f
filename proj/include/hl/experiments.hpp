#pragma once

#include "hl/constants.hpp"
#include "hl/exponents.hpp"
#include "hl/form_io.hpp"
#include "hl/ratio.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hl {

enum class Distribution
{
  Gaussian,
  Rademacher
};

std::string_view to_string(Distribution d);
Distribution parse_distribution(std::string_view text);

/// i.i.d. coefficients. Rademacher: +-1 (real) or uniform unimodular (complex).
/// Gaussian: standard normal (real) or standard complex normal.
template <typename Scalar>
MultilinearForm<Scalar> random_form(Distribution dist, int m, int n, std::uint64_t seed);
AnyForm random_form(Distribution dist, int m, int n, Field field, std::uint64_t seed);

struct ExperimentConfig
{
  HLParams params;
  std::vector<int> n_values{2};
  int trials = 30;
  Distribution distribution = Distribution::Rademacher;
  std::uint64_t seed = kDefaultSeed;
  NormOptions norm;
  int threads = 1;
  /// Ascent re-runs with 4x restarts before a ratio above the bound is flagged.
  int flag_retries = 2;

  /// Throws DomainError: trials >= 1, n_values nonempty and increasing, valid params.
  void validate() const;
};

enum class Soundness
{
  NotChecked,
  Pass,
  /// Above the bound with an ascent estimate only.
  Flag,
  /// Above the bound with an exact norm.
  Violation
};

std::string_view to_string(Soundness s);

struct TrialRecord
{
  int trial = 0;
  int n = 0;
  std::uint64_t form_seed = 0;
  double exponent = 0;
  double bound = 0;
  RatioResult result;
  Soundness status = Soundness::NotChecked;
};

struct SearchResult
{
  TrialRecord best;
  std::vector<TrialRecord> log;
  int flags = 0;
  int violations = 0;
};

/// Seed of trial `trial` at dimension n; depends only on (seed, n, trial).
std::uint64_t trial_seed(std::uint64_t seed, int n, int trial);

/// Runs one trial from an explicit form seed, checking soundness when
/// `exponent` is the Hardy-Littlewood exponent.
TrialRecord replay_trial(ExperimentConfig const &config, int n, std::uint64_t form_seed, int trial = 0);

/// hl_ratio over trials x n_values; the log is ordered by (n, trial).
SearchResult search_lower_bound(ExperimentConfig const &config);

struct SweepRow
{
  int n = 0;
  double exponent_used = 0;
  double best_ratio = 0;
  double median_ratio = 0;
  int trials = 0;
  /// Norm route: sign_enumeration, alternating_ascent or mixed.
  std::string oracle;
};

double median(std::vector<double> values);

/// mixed_norm(T, r) / ||T|| statistics per n. Requires 1 <= r <= rho.
std::vector<SweepRow> exponent_optimality_sweep(ExperimentConfig const &config, double exponent_r);

struct PRule
{
  enum class Kind
  {
    Fixed,
    Square,
    Linear
  };
  Kind kind = Kind::Square;
  ExtendedReal p;   // Fixed
  Rational c{2};    // Linear: p = c m

  static PRule fixed(ExtendedReal p) { return {Kind::Fixed, std::move(p), Rational(2)}; }
  static PRule square() { return {Kind::Square, ExtendedReal(), Rational(2)}; }
  static PRule linear(Rational c) { return {Kind::Linear, ExtendedReal(), std::move(c)}; }

  ExtendedReal apply(int m) const;
  std::string describe() const;
};

struct GrowthRow
{
  int m = 0;
  ExtendedReal p;
  double bound = 0;
  double legacy = 0;
  /// ln(bound / legacy).
  double log_ratio = 0;
};

struct GrowthStudy
{
  std::vector<GrowthRow> rows;
  int fit_m_min = 0;
  int fit_m_max = 0;
  /// Least-squares slope of ln(bound) against ln(m) over the fit range.
  double loglog_slope = 0;
  /// Least-squares slope of log2(bound) against m over the fit range.
  double log2_linear_slope = 0;
};

/// Closed-form bounds along p = rule(m). The fit range is the upper half
/// m >= max(m_min, m_max / 2). Throws DomainError if any p < 2m.
GrowthStudy growth_study(int m_min, int m_max, PRule const &rule, Field field);

/// Least-squares slope of y on x.
double fit_slope(std::vector<double> const &x, std::vector<double> const &y);

} // namespace hl
