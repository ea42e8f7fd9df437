#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ginv {

enum class ErrorKind {
  NonPositive,
  NotSquareFree,
  CapExceeded,
  NonResidue,
  NotPositiveDefinite,
  BoundMismatch,
  InertPrime,
  InexactDivision,
  InexactQuotient,
  InvariantViolation,
};

constexpr std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NonPositive: return "NonPositive";
    case ErrorKind::NotSquareFree: return "NotSquareFree";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NonResidue: return "NonResidue";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::BoundMismatch: return "BoundMismatch";
    case ErrorKind::InertPrime: return "InertPrime";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::InexactQuotient: return "InexactQuotient";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

/// Domain errors (bad input) versus internal ones (a broken invariant).
/// The CLI maps the former to exit code 2 and the latter to 1.
constexpr bool is_domain_error(ErrorKind k) {
  return k == ErrorKind::NonPositive || k == ErrorKind::NotSquareFree ||
         k == ErrorKind::InertPrime || k == ErrorKind::NonResidue;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

namespace detail {

// Overflow is a programming error at the supported scale (d < 1e7, C < 1e9).
inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  [[maybe_unused]] bool overflow = __builtin_mul_overflow(a, b, &r);
  assert(!overflow && "int64 multiplication overflow");
  return r;
}

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  [[maybe_unused]] bool overflow = __builtin_add_overflow(a, b, &r);
  assert(!overflow && "int64 addition overflow");
  return r;
}

inline std::int64_t exact_div(std::int64_t num, std::int64_t den,
                              std::string_view what) {
  if (den == 0 || num % den != 0) {
    throw Error(ErrorKind::InexactDivision,
                std::string(what) + ": " + std::to_string(num) + " / " +
                    std::to_string(den) + " is not integral");
  }
  return num / den;
}

// floor(sqrt(n)) for n >= 0, exact for the full int64 range.
inline std::int64_t isqrt(std::int64_t n) {
  assert(n >= 0);
  if (n < 2) return n;
  auto r = static_cast<std::int64_t>(__builtin_sqrt(static_cast<double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return -floor_div(-a, b);
}

inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace detail
}  // namespace ginv
