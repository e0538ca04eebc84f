#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace hl {

/// Seed published for every default experiment run.
inline constexpr std::uint64_t kDefaultSeed = 20150717;

inline std::uint64_t splitmix64(std::uint64_t x)
{
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Independent stream seed for a tuple of indices under a base seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> parts)
{
  std::uint64_t h = splitmix64(base);
  for (auto p : parts) {
    h = splitmix64(h ^ splitmix64(p + 0x632BE59BD9B4E019ULL));
  }
  return h;
}

using Rng = std::mt19937_64;

template <typename Scalar>
Scalar standard_normal(Rng &rng);

template <>
inline double standard_normal<double>(Rng &rng)
{
  return std::normal_distribution<double>(0.0, 1.0)(rng);
}

/// Standard complex normal: E|z|^2 = 1.
template <>
inline std::complex<double> standard_normal<std::complex<double>>(Rng &rng)
{
  std::normal_distribution<double> d(0.0, std::sqrt(0.5));
  double const re = d(rng);
  double const im = d(rng);
  return {re, im};
}

} // namespace hl
