#pragma once

#include <complex>
#include <string>
#include <string_view>

namespace hl {

enum class Field
{
  Real,
  Complex
};

std::string_view to_string(Field f);
/// "real" | "complex"; throws std::invalid_argument otherwise.
Field parse_field(std::string_view text);

template <typename Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<double>
{
  static constexpr Field field = Field::Real;
};

template <>
struct ScalarTraits<std::complex<double>>
{
  static constexpr Field field = Field::Complex;
};

template <typename Scalar>
inline constexpr Field field_of = ScalarTraits<Scalar>::field;

} // namespace hl
