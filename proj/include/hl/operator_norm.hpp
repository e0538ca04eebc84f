#pragma once

#include "hl/multilinear.hpp"
#include "hl/random.hpp"
#include "hl/rational.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace hl {

enum class NormOracle
{
  AlternatingAscent,
  SignEnumeration,
  GridSearch
};

std::string_view to_string(NormOracle o);
NormOracle parse_norm_oracle(std::string_view text);

struct AscentOptions
{
  int restarts = 32;
  int max_iters = 500;
  double tol = 1e-12;
  std::uint64_t seed = kDefaultSeed;
  int threads = 1;
  /// Keep the objective after every slot update of every restart.
  bool record_trace = false;
};

struct AscentResult
{
  /// Best |T(x_1, ..., x_m)| over restarts; a lower estimate of ||T||.
  double value = 0;
  int restarts = 0;
  /// Restarts that finished at objective 0.
  int degenerate_restarts = 0;
  /// Slot updates that met g = 0 and were reseeded.
  int reseeds = 0;
  /// False if any slot update lowered the objective beyond roundoff.
  bool monotone = true;
  std::vector<std::vector<double>> traces;

  bool all_degenerate() const { return restarts > 0 && degenerate_restarts == restarts; }
};

/// Hoelder maximizer of |sum_j g_j x_j| over the unit l_p ball, written into x.
/// Returns the maximum, ||g||_{p*}. Zero entries of g get x_j = 0.
template <typename Scalar>
double holder_maximizer(Eigen::Ref<Vec<Scalar> const> const &g, double p, Vec<Scalar> &x);

/// Multi-start alternating maximization of |T| over products of unit l_p
/// balls. Restart r draws from its own stream derive_seed(seed, {r}), so the
/// result depends only on (seed, restarts) and not on thread scheduling.
template <typename Scalar>
AscentResult operator_norm_ascent(MultilinearForm<Scalar> const &T, ExtendedReal const &p,
                                  AscentOptions const &options = {});

struct NormCertificate
{
  double value = 0;
  bool exact = false;
  NormOracle oracle = NormOracle::SignEnumeration;
};

/// Largest n(m-1) handled by sign enumeration (2^20 sign patterns).
inline constexpr int kMaxSignBits = 20;

/// Whether sign enumeration can certify ||T|| for this shape.
bool sign_enumeration_feasible(int m, int n);

/// Exact ||T|| for real p = inf by enumerating sign vectors of slots
/// 1..m-1 (the last slot contributes the l_1 norm of the induced functional).
/// Throws SizeGuardError when n(m-1) > 20.
double operator_norm_sign_enumeration(RealForm const &T);

struct GridOptions
{
  /// Upper bound on lattice directions tried in slot 1.
  int max_points = 20000;
  /// Candidates polished by full ascent.
  int polish = 16;
};

/// Approximate ||T|| for small forms: a lattice of directions for slot 1,
/// each completed by Hoelder updates of the other slots, best candidates
/// polished by ascent. Throws SizeGuardError when even a 3-point lattice per
/// real coordinate is too large.
template <typename Scalar>
double operator_norm_grid(MultilinearForm<Scalar> const &T, ExtendedReal const &p, GridOptions const &options = {});

/// Certification oracle: exact sign enumeration for real p = inf, else the
/// grid search (exact = false).
template <typename Scalar>
NormCertificate operator_norm_exact_small(MultilinearForm<Scalar> const &T, ExtendedReal const &p,
                                          GridOptions const &options = {});

} // namespace hl
