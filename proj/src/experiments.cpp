#include "hl/experiments.hpp"
#include "hl/parallel.hpp"
#include "hl/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace hl {

std::string_view to_string(Distribution d) { return d == Distribution::Gaussian ? "gaussian" : "rademacher"; }

Distribution parse_distribution(std::string_view text)
{
  if (text == "gaussian") {
    return Distribution::Gaussian;
  }
  if (text == "rademacher") {
    return Distribution::Rademacher;
  }
  throw std::invalid_argument("unknown distribution '" + std::string(text) + "' (expected gaussian|rademacher)");
}

std::string_view to_string(Soundness s)
{
  switch (s) {
  case Soundness::NotChecked: return "not_checked";
  case Soundness::Pass: return "PASS";
  case Soundness::Flag: return "FLAG";
  case Soundness::Violation: return "VIOLATION";
  }
  return "unknown";
}

template <typename Scalar>
MultilinearForm<Scalar> random_form(Distribution dist, int m, int n, std::uint64_t seed)
{
  Index const count = checked_power(n, m);
  Rng rng(seed);
  Vec<Scalar> coeffs(count);
  if (dist == Distribution::Gaussian) {
    for (Index i = 0; i < count; ++i) {
      coeffs[i] = standard_normal<Scalar>(rng);
    }
  } else if constexpr (std::is_same_v<Scalar, double>) {
    std::bernoulli_distribution coin(0.5);
    for (Index i = 0; i < count; ++i) {
      coeffs[i] = coin(rng) ? 1.0 : -1.0;
    }
  } else {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (Index i = 0; i < count; ++i) {
      coeffs[i] = std::polar(1.0, angle(rng));
    }
  }
  return MultilinearForm<Scalar>(m, n, std::move(coeffs));
}

template RealForm random_form<double>(Distribution, int, int, std::uint64_t);
template ComplexForm random_form<std::complex<double>>(Distribution, int, int, std::uint64_t);

AnyForm random_form(Distribution dist, int m, int n, Field field, std::uint64_t seed)
{
  if (field == Field::Real) {
    return random_form<double>(dist, m, n, seed);
  }
  return random_form<std::complex<double>>(dist, m, n, seed);
}

void ExperimentConfig::validate() const
{
  params.validate();
  if (trials < 1) {
    throw DomainError("trials must be >= 1");
  }
  if (n_values.empty()) {
    throw DomainError("n_values must be nonempty");
  }
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    if (n_values[i] < 1 || (i > 0 && n_values[i] <= n_values[i - 1])) {
      throw DomainError("n_values must be positive and strictly increasing");
    }
    checked_power(n_values[i], params.m);
  }
}

std::uint64_t trial_seed(std::uint64_t seed, int n, int trial)
{
  return derive_seed(seed, {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(trial)});
}

namespace {

template <typename Scalar>
RatioResult ratio_for(ExperimentConfig const &config, MultilinearForm<Scalar> const &T, double exponent,
                      std::uint64_t form_seed, int restarts)
{
  NormOptions opts = config.norm;
  opts.ascent.seed = derive_seed(form_seed, {1});
  opts.ascent.restarts = restarts;
  opts.ascent.threads = 1;
  return ratio_with_exponent(T, config.params.p, exponent, opts);
}

TrialRecord run_trial(ExperimentConfig const &config, int n, std::uint64_t form_seed, int trial, double exponent,
                      bool check_soundness)
{
  TrialRecord rec;
  rec.trial = trial;
  rec.n = n;
  rec.form_seed = form_seed;
  rec.exponent = exponent;
  rec.bound = hl_upper_bound(config.params.m, config.params.p, config.params.field);

  auto const form = random_form(config.distribution, config.params.m, n, config.params.field, form_seed);
  auto evaluate_with = [&](int restarts) {
    return std::visit([&](auto const &T) { return ratio_for(config, T, exponent, form_seed, restarts); }, form);
  };

  int restarts = config.norm.ascent.restarts;
  rec.result = evaluate_with(restarts);
  if (!check_soundness) {
    return rec;
  }
  double const limit = rec.bound * (1.0 + 1e-6);
  for (int retry = 0; rec.result.ratio > limit && rec.result.oracle == NormOracle::AlternatingAscent &&
                      retry < config.flag_retries;
       ++retry) {
    restarts *= 4;
    rec.result = evaluate_with(restarts);
  }
  if (rec.result.ratio <= limit) {
    rec.status = Soundness::Pass;
  } else {
    rec.status = rec.result.oracle == NormOracle::AlternatingAscent ? Soundness::Flag : Soundness::Violation;
  }
  return rec;
}

// Regenerates on the (probability zero) zero form.
TrialRecord seeded_trial(ExperimentConfig const &config, int n, int trial, double exponent, bool check)
{
  std::uint64_t seed = trial_seed(config.seed, n, trial);
  for (int attempt = 0;; ++attempt) {
    try {
      return run_trial(config, n, seed, trial, exponent, check);
    } catch (ZeroFormError const &) {
      if (attempt >= 8) {
        throw;
      }
      seed = derive_seed(seed, {static_cast<std::uint64_t>(attempt)});
    }
  }
}

std::vector<TrialRecord> run_all(ExperimentConfig const &config, double exponent, bool check)
{
  std::size_t const per_n = static_cast<std::size_t>(config.trials);
  std::vector<TrialRecord> log(config.n_values.size() * per_n);
  parallel_for(log.size(), config.threads, [&](std::size_t i) {
    int const n = config.n_values[i / per_n];
    int const trial = static_cast<int>(i % per_n);
    log[i] = seeded_trial(config, n, trial, exponent, check);
  });
  return log;
}

} // namespace

TrialRecord replay_trial(ExperimentConfig const &config, int n, std::uint64_t form_seed, int trial)
{
  config.params.validate();
  return run_trial(config, n, form_seed, trial, hl_exponent(config.params.m, config.params.p), true);
}

SearchResult search_lower_bound(ExperimentConfig const &config)
{
  config.validate();
  SearchResult out;
  out.log = run_all(config, hl_exponent(config.params.m, config.params.p), true);
  out.best = out.log.front();
  for (auto const &rec : out.log) {
    if (rec.result.ratio > out.best.result.ratio) {
      out.best = rec;
    }
    out.flags += rec.status == Soundness::Flag;
    out.violations += rec.status == Soundness::Violation;
  }
  return out;
}

double median(std::vector<double> values)
{
  if (values.empty()) {
    throw DomainError("median of an empty list");
  }
  std::sort(values.begin(), values.end());
  std::size_t const mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

std::vector<SweepRow> exponent_optimality_sweep(ExperimentConfig const &config, double exponent_r)
{
  config.validate();
  double const rho = hl_exponent(config.params.m, config.params.p);
  if (!(exponent_r >= 1.0) || exponent_r > rho * (1.0 + 1e-15)) {
    throw DomainError("sweep exponent must satisfy 1 <= r <= rho");
  }
  auto const log = run_all(config, exponent_r, false);

  std::vector<SweepRow> rows;
  std::size_t const per_n = static_cast<std::size_t>(config.trials);
  for (std::size_t k = 0; k < config.n_values.size(); ++k) {
    SweepRow row;
    row.n = config.n_values[k];
    row.exponent_used = exponent_r;
    row.trials = config.trials;
    std::vector<double> ratios;
    bool any_exact = false;
    bool any_ascent = false;
    for (std::size_t t = 0; t < per_n; ++t) {
      auto const &r = log[k * per_n + t].result;
      ratios.push_back(r.ratio);
      row.best_ratio = std::max(row.best_ratio, r.ratio);
      (r.oracle == NormOracle::AlternatingAscent ? any_ascent : any_exact) = true;
    }
    row.median_ratio = median(std::move(ratios));
    row.oracle = any_exact && any_ascent ? "mixed"
                 : any_exact            ? std::string(to_string(NormOracle::SignEnumeration))
                                        : std::string(to_string(NormOracle::AlternatingAscent));
    rows.push_back(std::move(row));
  }
  return rows;
}

ExtendedReal PRule::apply(int m) const
{
  switch (kind) {
  case Kind::Fixed: return p;
  case Kind::Square: return ExtendedReal(static_cast<long long>(m) * m);
  case Kind::Linear: return ExtendedReal(Rational(c * m));
  }
  return p;
}

std::string PRule::describe() const
{
  switch (kind) {
  case Kind::Fixed: return "fixed(" + p.to_string() + ")";
  case Kind::Square: return "square(m^2)";
  case Kind::Linear: return "linear(" + to_string(c) + "m)";
  }
  return "unknown";
}

double fit_slope(std::vector<double> const &x, std::vector<double> const &y)
{
  if (x.size() != y.size() || x.size() < 2) {
    throw DomainError("fit_slope needs at least two paired points");
  }
  double const n = static_cast<double>(x.size());
  double const mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  double const my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  if (sxx == 0.0) {
    throw DomainError("fit_slope: x values are all equal");
  }
  return sxy / sxx;
}

GrowthStudy growth_study(int m_min, int m_max, PRule const &rule, Field field)
{
  if (m_min < 2 || m_max < m_min) {
    throw DomainError("growth_study needs 2 <= m_min <= m_max");
  }
  GrowthStudy study;
  for (int m = m_min; m <= m_max; ++m) {
    ExtendedReal const p = rule.apply(m);
    require_hl_domain(m, p);
    GrowthRow row;
    row.m = m;
    row.p = p;
    row.bound = hl_upper_bound(m, p, field);
    row.legacy = legacy_bound(m);
    row.log_ratio = std::log(row.bound / row.legacy);
    study.rows.push_back(row);
  }
  study.fit_m_min = std::max(m_min, m_max / 2);
  study.fit_m_max = m_max;
  std::vector<double> log_m, m_values, log_bound, log2_bound;
  for (auto const &row : study.rows) {
    if (row.m >= study.fit_m_min) {
      log_m.push_back(std::log(row.m));
      m_values.push_back(row.m);
      log_bound.push_back(std::log(row.bound));
      log2_bound.push_back(std::log2(row.bound));
    }
  }
  if (log_m.size() >= 2) {
    study.loglog_slope = fit_slope(log_m, log_bound);
    study.log2_linear_slope = fit_slope(m_values, log2_bound);
  }
  return study;
}

} // namespace hl
