#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ginv/classgroup.hpp"
#include "ginv/error.hpp"
#include "ginv/field.hpp"
#include "ginv/form.hpp"
#include "ginv/repset.hpp"

namespace ginv {

/// Which of the six prime/field configurations a non-principal prime falls in.
enum class CaseCode {
  C1_RamifiedD12,  // p | d, d = 1,2 (mod 4)
  C2_RamifiedD3,   // p | d, d = 3 (mod 4)
  C3_TwoD1mod4,    // p = 2, d = 1 (mod 4)
  C4_TwoD7mod8,    // p = 2, d = 7 (mod 8)
  C5_SplitD12,     // p odd, p does not divide d, d = 1,2 (mod 4)
  C6_SplitD3,      // p odd, p does not divide d, d = 3 (mod 4)
};

inline constexpr std::array<CaseCode, 6> kAllCases = {
    CaseCode::C1_RamifiedD12, CaseCode::C2_RamifiedD3, CaseCode::C3_TwoD1mod4,
    CaseCode::C4_TwoD7mod8,   CaseCode::C5_SplitD12,   CaseCode::C6_SplitD3};

constexpr std::string_view to_string(CaseCode c) {
  switch (c) {
    case CaseCode::C1_RamifiedD12: return "C1_RamifiedD12";
    case CaseCode::C2_RamifiedD3: return "C2_RamifiedD3";
    case CaseCode::C3_TwoD1mod4: return "C3_TwoD1mod4";
    case CaseCode::C4_TwoD7mod8: return "C4_TwoD7mod8";
    case CaseCode::C5_SplitD12: return "C5_SplitD12";
    case CaseCode::C6_SplitD3: return "C6_SplitD3";
  }
  return "?";
}

inline std::optional<CaseCode> case_from_string(std::string_view s) {
  for (CaseCode c : kAllCases) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

/// 1-based number matching the order of the six configurations.
constexpr int case_number(CaseCode c) { return static_cast<int>(c) + 1; }

constexpr bool needs_n(CaseCode c) {
  return c == CaseCode::C5_SplitD12 || c == CaseCode::C6_SplitD3;
}

inline CaseCode dispatch_case(std::int64_t p, const FieldParams& fp) {
  const std::int64_t d = fp.d;
  if (d % p == 0) return fp.half_integral() ? CaseCode::C2_RamifiedD3 : CaseCode::C1_RamifiedD12;
  if (p == 2) {
    if (d % 4 == 1) return CaseCode::C3_TwoD1mod4;
    if (d % 8 == 7) return CaseCode::C4_TwoD7mod8;
    throw Error(ErrorKind::InertPrime,
                "2 is inert in Q(sqrt(-" + std::to_string(d) + ")); its prime is principal");
  }
  if (kronecker(-d, p) != 1) {
    throw Error(ErrorKind::InertPrime,
                std::to_string(p) + " is inert in Q(sqrt(-" + std::to_string(d) + "))");
  }
  return fp.half_integral() ? CaseCode::C6_SplitD3 : CaseCode::C5_SplitD12;
}

/// Threshold beyond which every r is represented by four copies of the block.
inline std::int64_t bound_C(CaseCode c, std::int64_t p, std::int64_t d, std::optional<std::int64_t> n) {
  using detail::exact_div;
  using detail::mul;
  if (needs_n(c) != n.has_value()) {
    throw Error(ErrorKind::InvariantViolation, "n must be given exactly for the split cases");
  }
  switch (c) {
    case CaseCode::C1_RamifiedD12:
    case CaseCode::C2_RamifiedD3:
      return exact_div(mul(p - 1, d), p, "(p-1)d/p");
    case CaseCode::C3_TwoD1mod4:
    case CaseCode::C4_TwoD7mod8:
      return exact_div(d + 1, 2, "(d+1)/2");
    case CaseCode::C5_SplitD12:
    case CaseCode::C6_SplitD3: {
      const std::int64_t nn = *n;
      const std::int64_t head = exact_div(mul(p, mul(p - 1, p - 1)), 4, "p(p-1)^2/4") +
                                mul(p - 1, nn) + exact_div(d + mul(nn, nn), p, "(d+n^2)/p");
      const std::int64_t tail = c == CaseCode::C5_SplitD12
                                    ? mul(2 * p, d)
                                    : exact_div(mul(p, d + 1), 4, "p(d+1)/4");
      return head + tail;
    }
  }
  throw Error(ErrorKind::InvariantViolation, "unknown case");
}

/// The binary form whose values are the achievable single-term values of r,
/// with the congruence restriction on the summands already eliminated.
inline BinaryQF block_form(CaseCode c, std::int64_t p, std::int64_t d, std::optional<std::int64_t> n) {
  using detail::exact_div;
  using detail::mul;
  if (needs_n(c) != n.has_value()) {
    throw Error(ErrorKind::InvariantViolation, "n must be given exactly for the split cases");
  }
  BinaryQF f;
  switch (c) {
    case CaseCode::C1_RamifiedD12:
      f = {p, 0, exact_div(d, p, "d/p")};
      break;
    case CaseCode::C2_RamifiedD3:
      f = {exact_div(d, p, "d/p"), -d, exact_div(mul(p, 1 + d), 4, "p(1+d)/4")};
      break;
    case CaseCode::C3_TwoD1mod4:
      f = {2, -2, exact_div(1 + d, 2, "(1+d)/2")};
      break;
    case CaseCode::C4_TwoD7mod8:
      f = {2, -1, exact_div(1 + d, 8, "(1+d)/8")};
      break;
    case CaseCode::C5_SplitD12:
      f = {p, -2 * *n, exact_div(d + mul(*n, *n), p, "(d+n^2)/p")};
      break;
    case CaseCode::C6_SplitD3:
      f = {p, -*n, exact_div(d + mul(*n, *n), 4 * p, "(d+n^2)/(4p)")};
      break;
  }
  require_positive_definite(f);
  return f;
}

struct PrimeCase {
  std::int64_t p = 0;
  CaseCode code = CaseCode::C1_RamifiedD12;
  std::optional<std::int64_t> n;
  std::int64_t C = 0;
  BinaryQF block;
  friend bool operator==(const PrimeCase&, const PrimeCase&) = default;
};

/// The block is the norm form on an index-p sublattice divided by p, so its
/// discriminant is the field discriminant.
inline void check_block_discriminant(const PrimeCase& pc, const FieldParams& fp) {
  if (pc.block.discriminant() != fp.discriminant) {
    throw Error(ErrorKind::InvariantViolation,
                "block " + to_string(pc.block) + " for p=" + std::to_string(pc.p) + " has discriminant " +
                    std::to_string(pc.block.discriminant()) + ", expected " +
                    std::to_string(fp.discriminant));
  }
}

inline PrimeCase make_prime_case(std::int64_t p, const FieldParams& fp) {
  PrimeCase pc;
  pc.p = p;
  pc.code = dispatch_case(p, fp);
  if (needs_n(pc.code)) pc.n = least_sqrt_neg_d(p, fp);
  pc.C = bound_C(pc.code, p, fp.d, pc.n);
  pc.block = block_form(pc.code, p, fp.d, pc.n);
  check_block_discriminant(pc, fp);
  return pc;
}

/// Positive r < pc.C not represented by the m-fold orthogonal sum of the block.
inline std::vector<std::int64_t> exception_set(const PrimeCase& pc, int m) {
  const RepSupport s = power_support(binary_support(pc.block, pc.C), m);
  return s.missing(1);
}

inline int g_of_prime(const std::vector<std::int64_t>& E, const std::vector<std::int64_t>& F) {
  if (!std::includes(F.begin(), F.end(), E.begin(), E.end())) {
    throw Error(ErrorKind::InvariantViolation, "exception set for five terms is not inside the one for four");
  }
  return E == F ? 4 : 5;
}

struct PrimeReport {
  PrimeCase prime_case;
  std::vector<std::int64_t> E;  // not represented with five terms
  std::vector<std::int64_t> F;  // not represented with four terms
  int g = 4;
  friend bool operator==(const PrimeReport&, const PrimeReport&) = default;
};

inline PrimeReport compute_prime_report(const PrimeCase& pc) {
  const RepSupport one = binary_support(pc.block, pc.C);
  const RepSupport four = power_support(one, 4);
  const RepSupport five = sumset(four, one);
  PrimeReport pr{pc, five.missing(1), four.missing(1), 4};
  pr.g = g_of_prime(pr.E, pr.F);
  return pr;
}

/// Pythagoras number of the ring of integers (published table).
inline int pythagoras(std::int64_t d) {
  switch (d) {
    case 1: case 2: case 3: case 7: case 11:
      return 2;
    case 5: case 6: case 15: case 19: case 23: case 27:
      return 3;
    default:
      return 4;
  }
}

enum class GSource { Table, Algorithm };

constexpr std::string_view to_string(GSource s) { return s == GSource::Table ? "table" : "algorithm"; }

struct ClassExclusion {
  std::size_t class_index = 0;
  std::vector<std::int64_t> excluded_r;
  friend bool operator==(const ClassExclusion&, const ClassExclusion&) = default;
};

struct FieldReport {
  FieldParams fp;
  std::int64_t class_number = 0;
  std::vector<ClassRep> class_reps;
  std::map<std::int64_t, PrimeReport> prime_reports;
  int pythagoras = 4;
  int g_d = 4;
  GSource g_source = GSource::Algorithm;
  /// Per class: the r for which the class's lattice with scale r is not
  /// representable by any I_m. Empty for the principal class.
  std::vector<ClassExclusion> s_description;

  std::int64_t max_C() const {
    std::int64_t m = 0;
    for (const auto& [p, pr] : prime_reports) m = std::max(m, pr.prime_case.C);
    return m;
  }
};

namespace detail {

inline int class_number_one_g(std::int64_t d) {
  switch (d) {
    case 1: case 2: case 3: case 7: case 11:
      return 2;
    case 19:
      return 3;
    case 43: case 67: case 163:
      return 4;
    default:
      throw Error(ErrorKind::InvariantViolation,
                  "d=" + std::to_string(d) + " has class number one but is not in the known list");
  }
}

}  // namespace detail

inline FieldReport analyze_field(std::int64_t d, std::int64_t search_cap = kDefaultSearchCap) {
  FieldReport rep;
  rep.fp = make_field(d);
  rep.class_reps = class_representatives(rep.fp, search_cap);
  rep.class_number = static_cast<std::int64_t>(rep.class_reps.size());
  rep.pythagoras = pythagoras(d);

  // Conjugate classes share their prime and, with it, the exception set.
  for (const ClassRep& cr : rep.class_reps) {
    if (cr.is_principal) continue;
    if (!cr.p) throw Error(ErrorKind::CapExceeded, "class " + to_string(cr.form) + " has no prime");
    if (!rep.prime_reports.contains(*cr.p)) {
      rep.prime_reports.emplace(*cr.p, compute_prime_report(make_prime_case(*cr.p, rep.fp)));
    }
  }
  for (std::size_t i = 0; i < rep.class_reps.size(); ++i) {
    const ClassRep& cr = rep.class_reps[i];
    ClassExclusion ex{i, {}};
    if (!cr.is_principal) ex.excluded_r = rep.prime_reports.at(*cr.p).E;
    rep.s_description.push_back(std::move(ex));
  }

  if (rep.class_number == 1) {
    rep.g_d = detail::class_number_one_g(d);
    rep.g_source = GSource::Table;
  } else if (rep.class_number <= 3) {
    rep.g_d = d == 907 ? 5 : rep.pythagoras;
    rep.g_source = GSource::Table;
  } else {
    rep.g_d = 4;
    for (const auto& [p, pr] : rep.prime_reports) rep.g_d = std::max(rep.g_d, pr.g);
    rep.g_source = GSource::Algorithm;
  }
  return rep;
}

}  // namespace ginv
