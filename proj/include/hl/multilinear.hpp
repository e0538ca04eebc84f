#pragma once

#include "hl/field.hpp"

#include <Eigen/Core>

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace hl {

using Index = Eigen::Index;

/// Largest n^m a form may hold.
inline constexpr Index kMaxCoefficients = 10'000'000;

struct SizeGuardError : std::length_error
{
  using std::length_error::length_error;
};

struct DimensionError : std::invalid_argument
{
  using std::invalid_argument::invalid_argument;
};

/// n^m, or throws SizeGuardError when it exceeds `limit`.
Index checked_power(int n, int m, Index limit = kMaxCoefficients);

/// Dense m-linear form on K^n x ... x K^n. Coefficient (j_1, ..., j_m) is
/// T(e_{j_1}, ..., e_{j_m}), stored row-major (j_m fastest). Immutable.
template <typename Scalar>
class MultilinearForm
{
public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Real = typename Eigen::NumTraits<Scalar>::Real;

  /// Zero form.
  MultilinearForm(int m, int n);
  MultilinearForm(int m, int n, Vector coefficients);

  int order() const { return m_; }
  int dim() const { return n_; }
  Index size() const { return coeffs_.size(); }
  Vector const &coefficients() const { return coeffs_; }

  Index linear_index(std::span<int const> multi) const;
  Scalar coefficient(std::span<int const> multi) const { return coeffs_[linear_index(multi)]; }

  MultilinearForm scaled(Scalar c) const;
  /// Slot k of the result is slot perm[k] of this form.
  MultilinearForm permuted(std::span<int const> perm) const;

  bool is_zero() const { return (coeffs_.array() == Scalar(0)).all(); }

private:
  int m_;
  int n_;
  Vector coeffs_;
};

template <typename Scalar>
using Vec = typename MultilinearForm<Scalar>::Vector;

/// T(x_1, ..., x_m); no conjugation in any slot.
template <typename Scalar>
Scalar evaluate(MultilinearForm<Scalar> const &T, std::span<Vec<Scalar> const> xs);

/// Coefficients of the linear functional left in `slot` (0-based) once every
/// other slot is fixed: g_j = T(x_1, ..., e_j, ..., x_m). xs[slot] is ignored.
template <typename Scalar>
Vec<Scalar> contract_except(MultilinearForm<Scalar> const &T, std::span<Vec<Scalar> const> xs, int slot);

/// (sum |c|^rho)^{1/rho} over all coefficients; rho = inf gives max |c|.
template <typename Scalar>
double mixed_norm(MultilinearForm<Scalar> const &T, double rho);

/// Outer l_outer norm over index j_slot (0-based) of inner l_inner norms over
/// all remaining indices.
template <typename Scalar>
double anisotropic_mixed_norm(MultilinearForm<Scalar> const &T, int slot, double outer, double inner);

/// l_p norm of a vector, p in [1, inf].
template <typename Scalar>
double lp_norm(Eigen::Ref<Vec<Scalar> const> const &x, double p);

using RealForm = MultilinearForm<double>;
using ComplexForm = MultilinearForm<std::complex<double>>;

extern template class MultilinearForm<double>;
extern template class MultilinearForm<std::complex<double>>;

} // namespace hl
