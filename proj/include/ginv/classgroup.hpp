#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ginv/error.hpp"
#include "ginv/field.hpp"
#include "ginv/form.hpp"
#include "ginv/repset.hpp"

namespace ginv {

inline constexpr std::int64_t kDefaultSearchCap = 10000;

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t k = 3; k <= n / k; k += 2) {
    if (n % k == 0) return false;
  }
  return true;
}

/// Kronecker symbol (D | p) for a prime p.
inline int kronecker(std::int64_t D, std::int64_t p) {
  if (p == 2) {
    if (D % 2 == 0) return 0;
    const std::int64_t r = detail::mod(D, 8);
    return (r == 1 || r == 7) ? 1 : -1;
  }
  const std::int64_t a = detail::mod(D, p);
  if (a == 0) return 0;
  // Euler's criterion
  std::int64_t result = 1, base = a, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result == 1 ? 1 : -1;
}

inline BinaryQF principal_form(const FieldParams& fp) {
  return {fp.norm_coeffs.a, fp.norm_coeffs.b, fp.norm_coeffs.c};
}

/// All reduced positive definite forms of discriminant fp.discriminant,
/// sorted by (a, b, c).
inline std::vector<BinaryQF> reduced_forms(const FieldParams& fp) {
  const std::int64_t D = fp.discriminant;
  const std::int64_t absD = -D;
  std::vector<BinaryQF> out;
  // reduced implies 3a^2 <= |D|
  for (std::int64_t a = 1; 3 * a * a <= absD; ++a) {
    for (std::int64_t b = -a; b <= a; ++b) {
      const std::int64_t num = b * b - D;
      if (num % (4 * a) != 0) continue;
      BinaryQF f{a, b, num / (4 * a)};
      if (f.reduced()) out.push_back(f);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::int64_t class_number(const FieldParams& fp) {
  return static_cast<std::int64_t>(reduced_forms(fp).size());
}

/// A reduced form standing for one ideal class, plus the prime it names.
struct ClassRep {
  BinaryQF form;
  bool is_principal = false;
  std::optional<std::int64_t> p;
  std::size_t conjugate_partner_index = 0;
  friend bool operator==(const ClassRep&, const ClassRep&) = default;
};

/// Smallest prime <= search_cap represented by the form.
inline std::int64_t prime_representative(const BinaryQF& form, const FieldParams& fp,
                                         std::int64_t search_cap = kDefaultSearchCap) {
  (void)fp;
  require_positive_definite(form);
  // Any representation of a prime is primitive, so the support suffices.
  const RepSupport values = binary_support(form, search_cap + 1);
  for (std::int64_t k = 2; k <= search_cap; ++k) {
    if (values.test(k) && is_prime(k)) return k;
  }
  throw Error(ErrorKind::CapExceeded, "no prime <= " + std::to_string(search_cap) +
                                          " represented by " + to_string(form));
}

/// Least n >= 1 with n^2 = -d (mod p); restricted to odd n when d = 3 (mod 4).
inline std::int64_t least_sqrt_neg_d(std::int64_t p, const FieldParams& fp) {
  const std::int64_t target = detail::mod(-fp.d, p);
  if (fp.half_integral()) {
    for (std::int64_t n = 1; n < 2 * p; n += 2) {
      if (n * n % p == target) return n;
    }
  } else {
    for (std::int64_t n = 1; n < p; ++n) {
      if (n * n % p == target) return n;
    }
  }
  throw Error(ErrorKind::NonResidue, "-" + std::to_string(fp.d) + " is not a square mod " +
                                         std::to_string(p));
}

/// The class list with a prime for every non-principal class.
inline std::vector<ClassRep> class_representatives(const FieldParams& fp,
                                                   std::int64_t search_cap = kDefaultSearchCap) {
  const std::vector<BinaryQF> forms = reduced_forms(fp);
  const BinaryQF principal = principal_form(fp);
  std::vector<ClassRep> reps;
  reps.reserve(forms.size());
  for (std::size_t i = 0; i < forms.size(); ++i) {
    ClassRep r;
    r.form = forms[i];
    r.is_principal = forms[i] == principal;
    // the inverse class is (a,-b,c), which is itself reduced unless it is ambiguous
    BinaryQF inverse{forms[i].a, -forms[i].b, forms[i].c};
    auto it = std::find(forms.begin(), forms.end(), inverse);
    r.conjugate_partner_index =
        it == forms.end() ? i : static_cast<std::size_t>(it - forms.begin());
    if (!r.is_principal) r.p = prime_representative(forms[i], fp, search_cap);
    reps.push_back(r);
  }
  return reps;
}

}  // namespace ginv
