#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ginv/classgroup.hpp"
#include "ginv/error.hpp"
#include "ginv/field.hpp"
#include "ginv/invariant.hpp"
#include "ginv/oracle.hpp"
#include "ginv/parallel.hpp"
#include "ginv/repset.hpp"

namespace ginv {

enum class Check {
  OracleEquivalence,  // congruence scan == block-form values on [0, C)
  ConjugateSymmetry,  // Plus and Minus congruence scans agree (split primes)
  TheoremBound,       // [C, C + margin) covered by four blocks
  Structural,         // E subset of F, 0 not in E, block discriminant
  Construction,       // building the prime case failed outright
};

constexpr std::string_view to_string(Check c) {
  switch (c) {
    case Check::OracleEquivalence: return "oracle-equivalence";
    case Check::ConjugateSymmetry: return "conjugate-symmetry";
    case Check::TheoremBound: return "theorem-bound";
    case Check::Structural: return "structural";
    case Check::Construction: return "construction";
  }
  return "?";
}

struct VerifyFailure {
  std::int64_t d = 0;
  std::int64_t p = 0;
  std::optional<CaseCode> code;
  Check check = Check::Construction;
  std::string detail;
};

struct VerifyOptions {
  std::int64_t d_max = 0;
  std::int64_t search_cap = kDefaultSearchCap;
  std::int64_t margin = 512;
  unsigned threads = 1;
  bool oracle = true;
  bool symmetry = true;
  bool coverage = true;
  /// Test hook: replaces each constructed block before checking.
  std::function<BinaryQF(const PrimeCase&)> block_fault;
};

struct VerifiedCase {
  std::int64_t d = 0;
  PrimeReport report;
};

struct VerifyResult {
  std::int64_t fields = 0;  // square-free d with class number >= 2
  std::int64_t prime_cases = 0;
  std::int64_t split_cases = 0;
  std::vector<VerifiedCase> cases;
  std::vector<VerifyFailure> failures;

  bool ok() const { return failures.empty(); }
};

inline bool is_split_case(CaseCode c) {
  return c == CaseCode::C4_TwoD7mod8 || c == CaseCode::C5_SplitD12 || c == CaseCode::C6_SplitD3;
}

namespace detail {

inline std::string preview(const std::vector<std::int64_t>& v, std::size_t k = 8) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size() && i < k; ++i) s += (i ? "," : "") + std::to_string(v[i]);
  if (v.size() > k) s += ",...";
  return s + "]";
}

inline std::string support_diff(const RepSupport& x, const RepSupport& y) {
  std::vector<std::int64_t> diff;
  for (std::int64_t k = 0; k < x.bound(); ++k) {
    if (x.test(k) != y.test(k)) diff.push_back(k);
  }
  return "differs at " + preview(diff);
}

// All checks for the primes of one field, appended to the given result.
inline void verify_field(std::int64_t d, const VerifyOptions& opt, VerifyResult& out) {
  const FieldParams fp = make_field(d);
  std::vector<ClassRep> reps;
  try {
    reps = class_representatives(fp, opt.search_cap);
  } catch (const Error& e) {
    out.failures.push_back({d, 0, std::nullopt, Check::Construction, e.what()});
    return;
  }
  if (reps.size() < 2) return;
  ++out.fields;

  std::vector<std::int64_t> primes;
  for (const auto& r : reps) {
    if (r.p && std::find(primes.begin(), primes.end(), *r.p) == primes.end()) primes.push_back(*r.p);
  }
  std::sort(primes.begin(), primes.end());

  for (std::int64_t p : primes) {
    PrimeCase pc;
    try {
      pc = make_prime_case(p, fp);
    } catch (const Error& e) {
      out.failures.push_back({d, p, std::nullopt, Check::Construction, e.what()});
      continue;
    }
    if (opt.block_fault) {
      pc.block = opt.block_fault(pc);
      if (!pc.block.positive_definite()) {
        out.failures.push_back({d, p, pc.code, Check::Construction,
                                "block " + to_string(pc.block) + " is not positive definite"});
        continue;
      }
    }
    ++out.prime_cases;
    auto fail = [&](Check c, std::string detail) {
      out.failures.push_back({d, p, pc.code, c, std::move(detail)});
    };

    try {
      if (pc.block.discriminant() != fp.discriminant) {
        fail(Check::Structural, "block " + to_string(pc.block) + " has wrong discriminant");
      }

      const RepSupport block_values = binary_support(pc.block, pc.C);
      if (opt.oracle || opt.symmetry) {
        const RepSupport plus = oracle::term_values(oracle::case_generators(pc), fp, pc.C);
        if (opt.oracle && !(plus == block_values)) {
          fail(Check::OracleEquivalence, "block " + to_string(pc.block) + " " + support_diff(plus, block_values));
        }
        if (opt.symmetry && is_split_case(pc.code)) {
          ++out.split_cases;
          const RepSupport minus =
              oracle::term_values(oracle::case_generators(pc, oracle::Variant::Minus), fp, pc.C);
          if (!(plus == minus)) fail(Check::ConjugateSymmetry, support_diff(plus, minus));
        }
      }

      PrimeReport pr = compute_prime_report(pc);
      if (!pr.E.empty() && pr.E.front() <= 0) fail(Check::Structural, "0 in E");
      if (!std::includes(pr.F.begin(), pr.F.end(), pr.E.begin(), pr.E.end())) {
        fail(Check::Structural, "E not contained in F");
      }

      if (opt.coverage && opt.margin > 0) {
        const RepSupport wide = power_support(binary_support(pc.block, pc.C + opt.margin), 4);
        const auto holes = wide.missing(pc.C);
        if (!holes.empty()) fail(Check::TheoremBound, "unrepresented r >= C: " + preview(holes));
      }
      out.cases.push_back({d, std::move(pr)});
    } catch (const Error& e) {
      fail(Check::Structural, std::string(to_string(e.kind())) + ": " + e.what());
    }
  }
}

}  // namespace detail

/// Runs the oracle, conjugate-symmetry and theorem-bound checks for every
/// square-free d <= d_max with class number at least two.
inline VerifyResult run_verification(const VerifyOptions& opt) {
  std::vector<std::int64_t> ds;
  for (std::int64_t d = 1; d <= opt.d_max; ++d) {
    if (is_square_free(d)) ds.push_back(d);
  }
  std::vector<VerifyResult> partial(ds.size());
  parallel_for(ds.size(), opt.threads, [&](std::size_t i) { detail::verify_field(ds[i], opt, partial[i]); });

  VerifyResult total;
  for (auto& r : partial) {
    total.fields += r.fields;
    total.prime_cases += r.prime_cases;
    total.split_cases += r.split_cases;
    for (auto& c : r.cases) total.cases.push_back(std::move(c));
    for (auto& f : r.failures) total.failures.push_back(std::move(f));
  }
  return total;
}

}  // namespace ginv
