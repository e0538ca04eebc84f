#include "hl/ratio.hpp"
#include "hl/special_functions.hpp"

namespace hl {

template <typename Scalar>
RatioResult operator_norm_best(MultilinearForm<Scalar> const &T, ExtendedReal const &p, NormOptions const &options)
{
  RatioResult r;
  if constexpr (std::is_same_v<Scalar, double>) {
    if (options.prefer_exact && p.is_infinite() && sign_enumeration_feasible(T.order(), T.dim())) {
      r.op_norm_estimate = operator_norm_sign_enumeration(T);
      r.oracle = NormOracle::SignEnumeration;
      r.restarts_used = 0;
      r.seed = options.ascent.seed;
      return r;
    }
  }
  auto const ascent = operator_norm_ascent(T, p, options.ascent);
  r.op_norm_estimate = ascent.value;
  r.oracle = NormOracle::AlternatingAscent;
  r.restarts_used = ascent.restarts;
  r.seed = options.ascent.seed;
  return r;
}

template <typename Scalar>
RatioResult ratio_with_exponent(MultilinearForm<Scalar> const &T, ExtendedReal const &p, double exponent,
                                NormOptions const &options)
{
  if (T.is_zero()) {
    throw ZeroFormError("ratio undefined for the zero form");
  }
  RatioResult r = operator_norm_best(T, p, options);
  if (r.op_norm_estimate <= 0.0) {
    throw ZeroFormError("operator norm estimate is zero");
  }
  r.mixed_norm = mixed_norm(T, exponent);
  r.ratio = r.mixed_norm / r.op_norm_estimate;
  return r;
}

template <typename Scalar>
RatioResult hl_ratio(MultilinearForm<Scalar> const &T, HLParams const &params, NormOptions const &options)
{
  params.validate();
  if (params.field != field_of<Scalar>) {
    throw DomainError("hl_ratio: form scalar type does not match the requested field");
  }
  if (T.order() != params.m) {
    throw DomainError("hl_ratio: form order does not match m");
  }
  return ratio_with_exponent(T, params.p, hl_exponent(params.m, params.p), options);
}

#define HL_INSTANTIATE(S)                                                                                              \
  template RatioResult operator_norm_best<S>(MultilinearForm<S> const &, ExtendedReal const &, NormOptions const &);  \
  template RatioResult ratio_with_exponent<S>(MultilinearForm<S> const &, ExtendedReal const &, double,                \
                                              NormOptions const &);                                                    \
  template RatioResult hl_ratio<S>(MultilinearForm<S> const &, HLParams const &, NormOptions const &);

HL_INSTANTIATE(double)
HL_INSTANTIATE(std::complex<double>)

#undef HL_INSTANTIATE

} // namespace hl
