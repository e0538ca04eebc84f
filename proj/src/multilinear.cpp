#include "hl/multilinear.hpp"
#include "hl/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace hl {

Index checked_power(int n, int m, Index limit)
{
  if (n < 1 || m < 1) {
    throw DomainError("form dimensions must satisfy m >= 1 and n >= 1");
  }
  Index total = 1;
  for (int i = 0; i < m; ++i) {
    if (total > limit / n) {
      throw SizeGuardError("n^m = " + std::to_string(n) + "^" + std::to_string(m) + " exceeds the limit of " +
                           std::to_string(limit) + " coefficients");
    }
    total *= n;
  }
  return total;
}

template <typename Scalar>
MultilinearForm<Scalar>::MultilinearForm(int m, int n)
  : m_(m)
  , n_(n)
  , coeffs_(Vector::Zero(checked_power(n, m)))
{
}

template <typename Scalar>
MultilinearForm<Scalar>::MultilinearForm(int m, int n, Vector coefficients)
  : m_(m)
  , n_(n)
  , coeffs_(std::move(coefficients))
{
  if (coeffs_.size() != checked_power(n, m)) {
    throw DimensionError("coefficient count must equal n^m");
  }
  if (!coeffs_.allFinite()) {
    throw DomainError("coefficients must be finite");
  }
}

template <typename Scalar>
Index MultilinearForm<Scalar>::linear_index(std::span<int const> multi) const
{
  if (static_cast<int>(multi.size()) != m_) {
    throw DimensionError("multi-index length must equal m");
  }
  Index idx = 0;
  for (int j : multi) {
    if (j < 0 || j >= n_) {
      throw DimensionError("multi-index entry out of range");
    }
    idx = idx * n_ + j;
  }
  return idx;
}

template <typename Scalar>
MultilinearForm<Scalar> MultilinearForm<Scalar>::scaled(Scalar c) const
{
  return MultilinearForm(m_, n_, Vector(coeffs_ * c));
}

template <typename Scalar>
MultilinearForm<Scalar> MultilinearForm<Scalar>::permuted(std::span<int const> perm) const
{
  if (static_cast<int>(perm.size()) != m_) {
    throw DimensionError("permutation length must equal m");
  }
  std::vector<int> check(perm.begin(), perm.end());
  std::sort(check.begin(), check.end());
  for (int k = 0; k < m_; ++k) {
    if (check[k] != k) {
      throw DimensionError("not a permutation of the slots");
    }
  }
  Vector out(coeffs_.size());
  std::vector<int> multi(m_, 0);
  std::vector<int> source(m_, 0);
  for (Index idx = 0; idx < coeffs_.size(); ++idx) {
    for (int k = 0; k < m_; ++k) {
      source[perm[k]] = multi[k];
    }
    out[idx] = coeffs_[linear_index(source)];
    for (int k = m_ - 1; k >= 0; --k) {
      if (++multi[k] < n_) {
        break;
      }
      multi[k] = 0;
    }
  }
  return MultilinearForm(m_, n_, std::move(out));
}

namespace {

template <typename Scalar>
void check_vectors(MultilinearForm<Scalar> const &T, std::span<Vec<Scalar> const> xs)
{
  if (static_cast<int>(xs.size()) != T.order()) {
    throw DimensionError("expected one vector per slot");
  }
  for (auto const &x : xs) {
    if (x.size() != T.dim()) {
      throw DimensionError("vector length must equal n");
    }
  }
}

// Contracts the trailing slots (last, ..., slot+1) and then the leading slots
// (0, ..., slot-1), leaving a length-n vector indexed by j_slot.
template <typename Scalar>
Vec<Scalar> contract_range(MultilinearForm<Scalar> const &T, std::span<Vec<Scalar> const> xs, int slot)
{
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Index const n = T.dim();
  Vec<Scalar> work = T.coefficients();
  for (int k = T.order() - 1; k > slot; --k) {
    Index const cols = work.size() / n;
    Vec<Scalar> next = Eigen::Map<Matrix const>(work.data(), n, cols).transpose() * xs[k];
    work.swap(next);
  }
  for (int k = 0; k < slot; ++k) {
    Index const rows = work.size() / n;
    Vec<Scalar> next = Eigen::Map<Matrix const>(work.data(), rows, n) * xs[k];
    work.swap(next);
  }
  return work;
}

} // namespace

template <typename Scalar>
Scalar evaluate(MultilinearForm<Scalar> const &T, std::span<Vec<Scalar> const> xs)
{
  check_vectors(T, xs);
  Vec<Scalar> const g = contract_range(T, xs, T.order() - 1);
  return (g.array() * xs.back().array()).sum();
}

template <typename Scalar>
Vec<Scalar> contract_except(MultilinearForm<Scalar> const &T, std::span<Vec<Scalar> const> xs, int slot)
{
  if (slot < 0 || slot >= T.order()) {
    throw DimensionError("slot index out of range");
  }
  check_vectors(T, xs);
  return contract_range(T, xs, slot);
}

namespace {

// l_rho norm of nonnegative magnitudes, scaled by the maximum to stay finite.
double magnitude_norm(Eigen::Ref<Eigen::ArrayXd const> const &mag, double rho)
{
  if (!(rho >= 1.0)) {
    throw DomainError("norm exponent must be >= 1");
  }
  if (mag.size() == 0) {
    return 0.0;
  }
  double const peak = mag.maxCoeff();
  if (peak == 0.0 || std::isinf(rho)) {
    return peak;
  }
  return peak * std::pow((mag / peak).pow(rho).sum(), 1.0 / rho);
}

} // namespace

template <typename Scalar>
double lp_norm(Eigen::Ref<Vec<Scalar> const> const &x, double p)
{
  Eigen::ArrayXd const mag = x.array().abs().template cast<double>();
  return magnitude_norm(mag, p);
}

template <typename Scalar>
double mixed_norm(MultilinearForm<Scalar> const &T, double rho)
{
  Eigen::ArrayXd const mag = T.coefficients().array().abs().template cast<double>();
  return magnitude_norm(mag, rho);
}

template <typename Scalar>
double anisotropic_mixed_norm(MultilinearForm<Scalar> const &T, int slot, double outer, double inner)
{
  if (slot < 0 || slot >= T.order()) {
    throw DimensionError("slot index out of range");
  }
  if (!(outer >= 1.0) || !(inner >= 1.0)) {
    throw DomainError("norm exponents must be >= 1");
  }
  Index const n = T.dim();
  // Row-major index = (a * n + j_slot) * trailing + b.
  Index trailing = 1;
  for (int k = slot + 1; k < T.order(); ++k) {
    trailing *= n;
  }
  Index const leading = T.size() / (n * trailing);
  Eigen::ArrayXd const mag = T.coefficients().array().abs().template cast<double>();

  Eigen::ArrayXd per_index(n);
  Eigen::ArrayXd slice(leading * trailing);
  for (Index j = 0; j < n; ++j) {
    for (Index a = 0; a < leading; ++a) {
      slice.segment(a * trailing, trailing) = mag.segment((a * n + j) * trailing, trailing);
    }
    per_index[j] = magnitude_norm(slice, inner);
  }
  return magnitude_norm(per_index, outer);
}

template class MultilinearForm<double>;
template class MultilinearForm<std::complex<double>>;

#define HL_INSTANTIATE(S)                                                                                              \
  template S evaluate<S>(MultilinearForm<S> const &, std::span<Vec<S> const>);                                         \
  template Vec<S> contract_except<S>(MultilinearForm<S> const &, std::span<Vec<S> const>, int);                        \
  template double mixed_norm<S>(MultilinearForm<S> const &, double);                                                   \
  template double anisotropic_mixed_norm<S>(MultilinearForm<S> const &, int, double, double);                          \
  template double lp_norm<S>(Eigen::Ref<Vec<S> const> const &, double);

HL_INSTANTIATE(double)
HL_INSTANTIATE(std::complex<double>)

#undef HL_INSTANTIATE

} // namespace hl
