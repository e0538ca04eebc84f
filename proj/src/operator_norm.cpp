#include "hl/operator_norm.hpp"
#include "hl/special_functions.hpp"
#include "hl/parallel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

namespace hl {

std::string_view to_string(NormOracle o)
{
  switch (o) {
  case NormOracle::AlternatingAscent: return "alternating_ascent";
  case NormOracle::SignEnumeration: return "sign_enumeration";
  case NormOracle::GridSearch: return "grid_search";
  }
  return "unknown";
}

NormOracle parse_norm_oracle(std::string_view text)
{
  if (text == "alternating_ascent") {
    return NormOracle::AlternatingAscent;
  }
  if (text == "sign_enumeration") {
    return NormOracle::SignEnumeration;
  }
  if (text == "grid_search") {
    return NormOracle::GridSearch;
  }
  throw std::invalid_argument("unknown norm oracle '" + std::string(text) + "'");
}

int default_thread_count()
{
  if (char const *env = std::getenv("HLBOUNDS_THREADS")) {
    int const v = std::atoi(env);
    if (v > 0) {
      return v;
    }
  }
  return 1;
}

namespace {

double to_exponent(ExtendedReal const &p)
{
  double const v = p.to_double();
  if (!(v >= 1.0)) {
    throw DomainError("operator norm requires p >= 1");
  }
  return v;
}

template <typename Scalar>
Scalar unit_phase(Scalar const &g)
{
  // Conjugate phase, so that g * phase = |g|.
  if constexpr (std::is_same_v<Scalar, double>) {
    return g > 0 ? 1.0 : (g < 0 ? -1.0 : 0.0);
  } else {
    double const a = std::abs(g);
    return a == 0.0 ? Scalar(0) : std::conj(g) / a;
  }
}

template <typename Scalar>
Vec<Scalar> random_unit(int n, double p, Rng &rng)
{
  Vec<Scalar> x(n);
  double norm = 0.0;
  while (norm == 0.0) {
    for (int i = 0; i < n; ++i) {
      x[i] = standard_normal<Scalar>(rng);
    }
    norm = lp_norm<Scalar>(x, p);
  }
  return x / norm;
}

struct RunStats
{
  double value = 0;
  int reseeds = 0;
  bool monotone = true;
};

template <typename Scalar>
RunStats ascend(MultilinearForm<Scalar> const &T, double p, std::vector<Vec<Scalar>> &xs, Rng &rng, int max_iters,
                double tol, std::vector<double> *trace)
{
  RunStats stats;
  std::span<Vec<Scalar> const> view(xs);
  double objective = std::abs(evaluate(T, view));
  if (trace) {
    trace->push_back(objective);
  }
  for (int iter = 0; iter < max_iters; ++iter) {
    double const previous = objective;
    for (int k = 0; k < T.order(); ++k) {
      Vec<Scalar> const g = contract_except(T, view, k);
      double updated = 0.0;
      if ((g.array() == Scalar(0)).all()) {
        xs[k] = random_unit<Scalar>(T.dim(), p, rng);
        ++stats.reseeds;
        updated = std::abs(evaluate(T, view));
      } else {
        updated = holder_maximizer<Scalar>(g, p, xs[k]);
      }
      if (updated < objective * (1.0 - 1e-12)) {
        stats.monotone = false;
      }
      objective = updated;
      if (trace) {
        trace->push_back(objective);
      }
    }
    if (objective - previous <= tol * objective) {
      break;
    }
  }
  stats.value = objective;
  return stats;
}

} // namespace

template <typename Scalar>
double holder_maximizer(Eigen::Ref<Vec<Scalar> const> const &g, double p, Vec<Scalar> &x)
{
  Index const n = g.size();
  x.setZero(n);
  Eigen::ArrayXd const mag = g.array().abs().template cast<double>();
  double const peak = n > 0 ? mag.maxCoeff() : 0.0;
  if (peak == 0.0) {
    return 0.0;
  }
  if (std::isinf(p)) {
    for (Index j = 0; j < n; ++j) {
      x[j] = unit_phase(g[j]);
    }
    return mag.sum();
  }
  if (p == 1.0) {
    Index arg = 0;
    mag.maxCoeff(&arg);
    x[arg] = unit_phase(g[arg]);
    return peak;
  }
  double const q = p / (p - 1.0);
  Eigen::ArrayXd const h = mag / peak;
  double const hq = std::pow(h.pow(q).sum(), 1.0 / q);
  for (Index j = 0; j < n; ++j) {
    if (h[j] > 0.0) {
      x[j] = unit_phase(g[j]) * (std::pow(h[j], q - 1.0) / std::pow(hq, q - 1.0));
    }
  }
  return peak * hq;
}

template <typename Scalar>
AscentResult operator_norm_ascent(MultilinearForm<Scalar> const &T, ExtendedReal const &p, AscentOptions const &options)
{
  if (options.restarts < 1) {
    throw DomainError("operator_norm_ascent: restarts must be >= 1");
  }
  if (options.max_iters < 1) {
    throw DomainError("operator_norm_ascent: max_iters must be >= 1");
  }
  double const pv = to_exponent(p);
  std::size_t const restarts = static_cast<std::size_t>(options.restarts);

  std::vector<RunStats> runs(restarts);
  std::vector<std::vector<double>> traces(options.record_trace ? restarts : 0);
  parallel_for(restarts, options.threads, [&](std::size_t r) {
    Rng rng(derive_seed(options.seed, {r}));
    std::vector<Vec<Scalar>> xs;
    xs.reserve(T.order());
    for (int k = 0; k < T.order(); ++k) {
      xs.push_back(random_unit<Scalar>(T.dim(), pv, rng));
    }
    runs[r] = ascend(T, pv, xs, rng, options.max_iters, options.tol, options.record_trace ? &traces[r] : nullptr);
  });

  AscentResult result;
  result.restarts = options.restarts;
  for (auto const &run : runs) {
    result.value = std::max(result.value, run.value);
    result.reseeds += run.reseeds;
    result.monotone = result.monotone && run.monotone;
    if (run.value == 0.0) {
      ++result.degenerate_restarts;
    }
  }
  result.traces = std::move(traces);
  return result;
}

bool sign_enumeration_feasible(int m, int n) { return m >= 1 && n >= 1 && static_cast<long long>(n) * (m - 1) <= kMaxSignBits; }

double operator_norm_sign_enumeration(RealForm const &T)
{
  int const m = T.order();
  int const n = T.dim();
  if (!sign_enumeration_feasible(m, n)) {
    throw SizeGuardError("sign enumeration needs n(m-1) <= " + std::to_string(kMaxSignBits));
  }
  if (m == 1) {
    return T.coefficients().cwiseAbs().sum();
  }

  using Matrix = Eigen::MatrixXd;
  // Slots 0..m-3 enumerated outright; slot m-2 by Gray code against the
  // n x n matrix left after contracting the outer slots.
  int const outer_slots = m - 2;
  int const outer_bits = n * outer_slots;
  // Global sign symmetry: the first coordinate of slot 0 stays +1.
  bool const fix_outer = outer_slots > 0;
  int const free_outer_bits = fix_outer ? outer_bits - 1 : 0;
  int const inner_offset = fix_outer ? 0 : 1;
  int const inner_bits = n - inner_offset;

  std::vector<Eigen::VectorXd> xs(m, Eigen::VectorXd::Ones(n));
  double best = 0.0;
  for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << free_outer_bits); ++pattern) {
    for (int b = 0; b < outer_bits; ++b) {
      int const slot = b / n;
      int const coord = b % n;
      bool const negative = b > 0 && ((pattern >> (b - 1)) & 1U);
      xs[slot][coord] = negative ? -1.0 : 1.0;
    }

    // Contract the outer slots: what remains is indexed (j_{m-2}, j_{m-1}).
    Eigen::VectorXd work = T.coefficients();
    for (int k = 0; k < outer_slots; ++k) {
      Index const rows = work.size() / n;
      Eigen::VectorXd next = Eigen::Map<Matrix const>(work.data(), rows, n) * xs[k];
      work.swap(next);
    }
    // Column a of M (a = j_{m-2}) is the functional on slot m-1.
    Eigen::Map<Matrix const> M(work.data(), n, n);

    Eigen::VectorXd y = Eigen::VectorXd::Ones(n);
    Eigen::VectorXd g = M * y;
    best = std::max(best, g.cwiseAbs().sum());
    std::uint64_t const steps = std::uint64_t{1} << inner_bits;
    for (std::uint64_t t = 1; t < steps; ++t) {
      int const i = std::countr_zero(t) + inner_offset;
      y[i] = -y[i];
      if ((t & 63U) == 0) {
        g.noalias() = M * y;
      } else {
        g += (2.0 * y[i]) * M.col(i);
      }
      best = std::max(best, g.cwiseAbs().sum());
    }
  }
  return best;
}

template <typename Scalar>
double operator_norm_grid(MultilinearForm<Scalar> const &T, ExtendedReal const &p, GridOptions const &options)
{
  double const pv = to_exponent(p);
  int const m = T.order();
  int const n = T.dim();
  constexpr int kParts = std::is_same_v<Scalar, double> ? 1 : 2;
  int const dims = kParts * n;

  auto lattice_size = [dims](int k) {
    double total = 1.0;
    for (int i = 0; i < dims; ++i) {
      total *= 2.0 * k + 1.0;
    }
    return total;
  };
  if (lattice_size(1) > options.max_points) {
    throw SizeGuardError("grid oracle: form too large for a direction lattice");
  }
  int K = 1;
  while (lattice_size(K + 1) <= options.max_points) {
    ++K;
  }

  Rng rng(kDefaultSeed);
  if (m == 1) {
    Vec<Scalar> x;
    return holder_maximizer<Scalar>(T.coefficients(), pv, x);
  }

  struct Candidate
  {
    double value;
    std::vector<Vec<Scalar>> xs;
  };
  std::vector<Candidate> candidates;
  double best = 0.0;

  std::vector<int> digits(dims, -K);
  long long const total = static_cast<long long>(lattice_size(K));
  for (long long point = 0; point < total; ++point) {
    // Skip the origin and one of each +-x pair.
    int first = 0;
    while (first < dims && digits[first] == 0) {
      ++first;
    }
    if (first < dims && digits[first] > 0) {
      std::vector<Vec<Scalar>> xs(m, Vec<Scalar>::Ones(n) / lp_norm<Scalar>(Vec<Scalar>::Ones(n), pv));
      Vec<Scalar> dir(n);
      for (int i = 0; i < n; ++i) {
        if constexpr (kParts == 1) {
          dir[i] = digits[i];
        } else {
          dir[i] = Scalar(digits[2 * i], digits[2 * i + 1]);
        }
      }
      xs[0] = dir / lp_norm<Scalar>(dir, pv);

      std::span<Vec<Scalar> const> view(xs);
      double value = 0.0;
      for (int sweep = 0; sweep < 3; ++sweep) {
        for (int k = 1; k < m; ++k) {
          Vec<Scalar> const g = contract_except(T, view, k);
          value = holder_maximizer<Scalar>(g, pv, xs[k]);
        }
      }
      best = std::max(best, value);
      candidates.push_back({value, std::move(xs)});
      if (static_cast<int>(candidates.size()) > 4 * options.polish) {
        std::partial_sort(candidates.begin(), candidates.begin() + options.polish, candidates.end(),
                          [](auto const &a, auto const &b) { return a.value > b.value; });
        candidates.resize(options.polish);
      }
    }
    for (int i = dims - 1; i >= 0; --i) {
      if (++digits[i] <= K) {
        break;
      }
      digits[i] = -K;
    }
  }

  std::sort(candidates.begin(), candidates.end(), [](auto const &a, auto const &b) { return a.value > b.value; });
  if (static_cast<int>(candidates.size()) > options.polish) {
    candidates.resize(options.polish);
  }
  for (auto &c : candidates) {
    auto const stats = ascend(T, pv, c.xs, rng, 2000, 1e-15, nullptr);
    best = std::max(best, stats.value);
  }
  return best;
}

template <typename Scalar>
NormCertificate operator_norm_exact_small(MultilinearForm<Scalar> const &T, ExtendedReal const &p,
                                          GridOptions const &options)
{
  if constexpr (std::is_same_v<Scalar, double>) {
    if (p.is_infinite()) {
      return {operator_norm_sign_enumeration(T), true, NormOracle::SignEnumeration};
    }
  }
  return {operator_norm_grid(T, p, options), false, NormOracle::GridSearch};
}

#define HL_INSTANTIATE(S)                                                                                              \
  template double holder_maximizer<S>(Eigen::Ref<Vec<S> const> const &, double, Vec<S> &);                             \
  template AscentResult operator_norm_ascent<S>(MultilinearForm<S> const &, ExtendedReal const &,                      \
                                                AscentOptions const &);                                                \
  template double operator_norm_grid<S>(MultilinearForm<S> const &, ExtendedReal const &, GridOptions const &);        \
  template NormCertificate operator_norm_exact_small<S>(MultilinearForm<S> const &, ExtendedReal const &,              \
                                                        GridOptions const &);

HL_INSTANTIATE(double)
HL_INSTANTIATE(std::complex<double>)

#undef HL_INSTANTIATE

} // namespace hl
