#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "ginv/error.hpp"

namespace ginv {

/// Integral binary quadratic form a x^2 + b xy + c y^2.
struct BinaryQF {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  std::int64_t discriminant() const { return b * b - 4 * a * c; }
  /// 4ac - b^2; positive exactly when the form is definite.
  std::int64_t det4() const { return 4 * a * c - b * b; }
  bool positive_definite() const { return a > 0 && det4() > 0; }

  bool reduced() const {
    if (!positive_definite()) return false;
    const std::int64_t ab = b < 0 ? -b : b;
    if (!(ab <= a && a <= c)) return false;
    if ((ab == a || a == c) && b < 0) return false;
    return true;
  }

  std::int64_t operator()(std::int64_t x, std::int64_t y) const {
    using detail::add;
    using detail::mul;
    return add(add(mul(a, mul(x, x)), mul(b, mul(x, y))), mul(c, mul(y, y)));
  }

  friend auto operator<=>(const BinaryQF&, const BinaryQF&) = default;
  friend bool operator==(const BinaryQF&, const BinaryQF&) = default;
};

inline std::string to_string(const BinaryQF& f) {
  return "(" + std::to_string(f.a) + "," + std::to_string(f.b) + "," + std::to_string(f.c) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const BinaryQF& f) { return os << to_string(f); }

inline void require_positive_definite(const BinaryQF& f) {
  if (!f.positive_definite()) {
    throw Error(ErrorKind::NotPositiveDefinite, "form " + to_string(f) + " is not positive definite");
  }
}

/// Visits every lattice point (x, y) with f(x, y) <= limit exactly once,
/// calling visit(x, y, value). y-major; the x-interval for each y is taken
/// from the integer square root of the discriminant of the quadratic in x,
/// widened by one on each side and filtered exactly.
template <typename Visitor>
void for_each_point_below(const BinaryQF& f, std::int64_t limit, Visitor&& visit) {
  require_positive_definite(f);
  if (limit < 0) return;
  using detail::add;
  using detail::mul;
  const std::int64_t D = f.det4();
  // a * f(x,y) * 4 = (2ax + by)^2 + D y^2, so D y^2 <= 4a*limit.
  const std::int64_t four_a_limit = mul(4 * f.a, limit);
  const std::int64_t y_max = detail::isqrt(four_a_limit / D);
  for (std::int64_t y = -y_max; y <= y_max; ++y) {
    const std::int64_t rest = four_a_limit - mul(D, mul(y, y));
    if (rest < 0) continue;
    const std::int64_t s = detail::isqrt(rest);
    // (2ax + by)^2 <= rest  <=>  -s <= 2ax + by <= s
    const std::int64_t by = mul(f.b, y);
    const std::int64_t x_lo = detail::floor_div(-s - by, 2 * f.a) - 1;
    const std::int64_t x_hi = detail::ceil_div(s - by, 2 * f.a) + 1;
    for (std::int64_t x = x_lo; x <= x_hi; ++x) {
      const std::int64_t v = f(x, y);
      if (v <= limit) visit(x, y, v);
    }
  }
}

}  // namespace ginv
