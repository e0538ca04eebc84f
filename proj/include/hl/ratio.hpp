#pragma once

#include "hl/exponents.hpp"
#include "hl/multilinear.hpp"
#include "hl/operator_norm.hpp"

#include <cstdint>
#include <stdexcept>

namespace hl {

struct ZeroFormError : std::domain_error
{
  using std::domain_error::domain_error;
};

struct NormOptions
{
  AscentOptions ascent;
  /// Use sign enumeration whenever the form is real, p = inf and n(m-1) <= 20.
  bool prefer_exact = true;
};

/// Empirical witness C_{m,p} >= ratio.
struct RatioResult
{
  double mixed_norm = 0;
  double op_norm_estimate = 0;
  double ratio = 0;
  int restarts_used = 0;
  NormOracle oracle = NormOracle::AlternatingAscent;
  std::uint64_t seed = 0;
};

/// ||T|| by the best available route: exact enumeration when feasible,
/// multi-start ascent otherwise. `restarts_used` is 0 for enumeration.
template <typename Scalar>
RatioResult operator_norm_best(MultilinearForm<Scalar> const &T, ExtendedReal const &p, NormOptions const &options);

/// mixed_norm(T, exponent) / ||T||. Throws ZeroFormError for the zero form.
template <typename Scalar>
RatioResult ratio_with_exponent(MultilinearForm<Scalar> const &T, ExtendedReal const &p, double exponent,
                                NormOptions const &options = {});

/// ratio_with_exponent at the Hardy-Littlewood exponent of params.
/// Throws DomainError when params are invalid or do not match T.
template <typename Scalar>
RatioResult hl_ratio(MultilinearForm<Scalar> const &T, HLParams const &params, NormOptions const &options = {});

} // namespace hl
