#pragma once

#include <cstdint>
#include <string>

#include "ginv/error.hpp"

namespace ginv {

enum class OmegaKind {
  SqrtMinusD,             // d = 1, 2 (mod 4): omega = sqrt(-d)
  HalfOnePlusSqrtMinusD,  // d = 3 (mod 4):    omega = (1 + sqrt(-d)) / 2
};

/// Coefficients (a, b, c) of the norm form N(x + y*omega) = a x^2 + b xy + c y^2.
struct NormCoeffs {
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::int64_t c = 1;
  friend bool operator==(const NormCoeffs&, const NormCoeffs&) = default;
};

/// The imaginary quadratic field Q(sqrt(-d)) with ring of integers Z + Z*omega.
struct FieldParams {
  std::int64_t d = 1;
  OmegaKind omega_kind = OmegaKind::SqrtMinusD;
  std::int64_t discriminant = -4;
  NormCoeffs norm_coeffs;

  bool half_integral() const { return omega_kind == OmegaKind::HalfOnePlusSqrtMinusD; }
  friend bool operator==(const FieldParams&, const FieldParams&) = default;
};

inline bool is_square_free(std::int64_t d) {
  if (d < 1) return false;
  for (std::int64_t k = 2; k <= d / k; ++k) {
    if (d % (k * k) == 0) return false;
  }
  return true;
}

inline FieldParams make_field(std::int64_t d) {
  if (d <= 0) {
    throw Error(ErrorKind::NonPositive, "d must be positive, got " + std::to_string(d));
  }
  for (std::int64_t k = 2; k <= d / k; ++k) {
    if (d % (k * k) == 0) {
      throw Error(ErrorKind::NotSquareFree,
                  "d must be square-free: " + std::to_string(k * k) + " divides " +
                      std::to_string(d));
    }
  }
  FieldParams fp;
  fp.d = d;
  if (d % 4 == 3) {
    fp.omega_kind = OmegaKind::HalfOnePlusSqrtMinusD;
    fp.discriminant = -d;
    fp.norm_coeffs = {1, 1, (1 + d) / 4};
  } else {
    fp.omega_kind = OmegaKind::SqrtMinusD;
    fp.discriminant = -4 * d;
    fp.norm_coeffs = {1, 0, d};
  }
  return fp;
}

/// An element a + b*omega of the ring of integers.
struct Integer {
  std::int64_t a = 0;
  std::int64_t b = 0;
  friend bool operator==(const Integer&, const Integer&) = default;
};

inline std::int64_t norm(std::int64_t a, std::int64_t b, const FieldParams& fp) {
  using detail::add;
  using detail::mul;
  return add(add(mul(a, a), mul(fp.norm_coeffs.b, mul(a, b))),
             mul(fp.norm_coeffs.c, mul(b, b)));
}

inline std::int64_t norm(Integer x, const FieldParams& fp) { return norm(x.a, x.b, fp); }

// omega^2 = -d, or omega^2 = omega - (1+d)/4.
inline Integer multiply(Integer x, Integer y, const FieldParams& fp) {
  using detail::add;
  using detail::mul;
  const std::int64_t bb = mul(x.b, y.b);
  const std::int64_t cross = add(mul(x.a, y.b), mul(x.b, y.a));
  if (fp.half_integral()) {
    return {add(mul(x.a, y.a), -mul(fp.norm_coeffs.c, bb)), add(cross, bb)};
  }
  return {add(mul(x.a, y.a), -mul(fp.d, bb)), cross};
}

/// Complex conjugate: omega-bar is -omega, or 1 - omega.
inline Integer conjugate(Integer x, const FieldParams& fp) {
  if (fp.half_integral()) return {x.a + x.b, -x.b};
  return {x.a, -x.b};
}

}  // namespace ginv
