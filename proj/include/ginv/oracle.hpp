#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ginv/error.hpp"
#include "ginv/field.hpp"
#include "ginv/form.hpp"
#include "ginv/invariant.hpp"
#include "ginv/repset.hpp"

// Brute-force route to the single-term value sets. Shares nothing with the
// block forms: it enumerates raw ring elements gamma = a + b*omega and keeps
// those with (s + t*omega) * gamma in pO.

namespace ginv::oracle {

enum class Variant { Plus, Minus };

/// The prime ideal Op + O(s + t*omega), or its conjugate when variant is Minus.
struct IdealGenerators {
  std::int64_t p = 0;
  std::int64_t s = 0;
  std::int64_t t = 0;
  Variant variant = Variant::Plus;
};

/// Generator coefficients (s, t) after applying the variant.
inline Integer effective_generator(const IdealGenerators& ig, const FieldParams& fp) {
  const Integer g{ig.s, ig.t};
  return ig.variant == Variant::Plus ? g : conjugate(g, fp);
}

/// The generator used for each case: omega, sqrt(-d) = -1 + 2*omega,
/// 1 + omega, omega, n + omega, and (n-1)/2 + omega.
inline IdealGenerators case_generators(CaseCode c, std::int64_t p, std::optional<std::int64_t> n,
                                       Variant v = Variant::Plus) {
  switch (c) {
    case CaseCode::C1_RamifiedD12: return {p, 0, 1, v};
    case CaseCode::C2_RamifiedD3: return {p, -1, 2, v};
    case CaseCode::C3_TwoD1mod4: return {p, 1, 1, v};
    case CaseCode::C4_TwoD7mod8: return {p, 0, 1, v};
    case CaseCode::C5_SplitD12: return {p, n.value(), 1, v};
    case CaseCode::C6_SplitD3: return {p, (n.value() - 1) / 2, 1, v};
  }
  throw Error(ErrorKind::InvariantViolation, "unknown case");
}

inline IdealGenerators case_generators(const PrimeCase& pc, Variant v = Variant::Plus) {
  return case_generators(pc.code, pc.p, pc.n, v);
}

/// Both coordinates of (s + t*omega)(a + b*omega) divisible by p.
inline bool satisfies_congruences(const IdealGenerators& ig, const FieldParams& fp, Integer gamma) {
  const Integer prod = multiply(effective_generator(ig, fp), gamma, fp);
  return prod.a % ig.p == 0 && prod.b % ig.p == 0;
}

inline void check_generator(const IdealGenerators& ig, const FieldParams& fp) {
  if (norm(effective_generator(ig, fp), fp) % ig.p != 0) {
    throw Error(ErrorKind::InvariantViolation, "generator norm not divisible by p=" + std::to_string(ig.p));
  }
}

/// Support of N(gamma)/p over all gamma satisfying the congruences, below bound.
inline RepSupport term_values(const IdealGenerators& ig, const FieldParams& fp, std::int64_t bound) {
  check_generator(ig, fp);
  RepSupport out(bound);
  const BinaryQF norm_form{fp.norm_coeffs.a, fp.norm_coeffs.b, fp.norm_coeffs.c};
  const std::int64_t limit = detail::mul(ig.p, bound) - 1;
  for_each_point_below(norm_form, limit, [&](std::int64_t a, std::int64_t b, std::int64_t v) {
    if (!satisfies_congruences(ig, fp, {a, b})) return;
    if (v % ig.p != 0) {
      throw Error(ErrorKind::InexactQuotient, "N(" + std::to_string(a) + "+" + std::to_string(b) +
                                                  "w)=" + std::to_string(v) + " not divisible by " +
                                                  std::to_string(ig.p));
    }
    out.set(v / ig.p);
  });
  return out;
}

inline std::vector<std::int64_t> oracle_exception_set(const IdealGenerators& ig, const FieldParams& fp,
                                                      std::int64_t C, int m) {
  return power_support(term_values(ig, fp, C), m).missing(1);
}

}  // namespace ginv::oracle
