#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ginv/invariant.hpp"

namespace ginv {

namespace detail {

struct SageTemplate {
  const char* header;  // "sage: ..." first line with parameters substituted
  const char* a;
  const char* b;
  const char* c;
};

inline SageTemplate sage_template(CaseCode code) {
  switch (code) {
    case CaseCode::C1_RamifiedD12: return {"C=(p-1)*d/p", "p", "0", "d/p"};
    case CaseCode::C2_RamifiedD3: return {"C=(p-1)*d/p", "d/p", "-d", "p*(1+d)/4"};
    case CaseCode::C3_TwoD1mod4: return {"C=(1+d)/2", "2", "-2", "(1+d)/2"};
    case CaseCode::C4_TwoD7mod8: return {"C=(1+d)/2", "2", "-1", "(1+d)/8"};
    case CaseCode::C5_SplitD12:
      return {"C=p*(p-1)*(p-1)/4+(p-1)*n+(d+n*n)/p+2*p*d", "p", "-2*n", "(d+n*n)/p"};
    case CaseCode::C6_SplitD3:
      return {"C=p*(p-1)*(p-1)/4+(p-1)*n+(d+n*n)/p+p*(d+1)/4", "p", "-n", "(d+n*n)/(4*p)"};
  }
  return {"", "", "", ""};
}

// Upper-triangular coefficient list of the block-diagonal form with
// `vars / 2` copies of the block.
inline std::string sage_coefficients(const SageTemplate& t, int vars) {
  std::string s;
  for (int i = 0; i < vars; ++i) {
    for (int j = i; j < vars; ++j) {
      const char* entry = "0";
      if (i == j) entry = (i % 2 == 0) ? t.a : t.c;
      else if (j == i + 1 && i % 2 == 0) entry = t.b;
      if (!s.empty()) s += ',';
      s += entry;
    }
  }
  return s;
}

inline std::string python_tuple(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  if (v.size() == 1) s += ",";
  return s + ")";
}

}  // namespace detail

/// SageMath session computing g(p) and E(p) for the case of (d, p), for
/// checking against a computer-algebra system. With results set, the
/// values computed here are appended as the session's output lines.
inline std::string emit_sage_script(const PrimeCase& pc, std::int64_t d,
                                    const PrimeReport* results = nullptr) {
  const auto t = detail::sage_template(pc.code);
  std::string out = "sage: p=" + std::to_string(pc.p) + "; d=" + std::to_string(d) + "; ";
  if (pc.n) out += "n=" + std::to_string(*pc.n) + "; ";
  out += t.header;
  out += '\n';
  out += "sage: Q=QuadraticForm(ZZ, 10, [" + detail::sage_coefficients(t, 10) + "])\n";
  out += "sage: S=Q.representation_number_list(C)\n";
  out += "sage: Q=QuadraticForm(ZZ, 8, [" + detail::sage_coefficients(t, 8) + "])\n";
  out +=
      "sage: T=Q.representation_number_list(C)\n"
      "sage: def u(l):\n"
      "sage:     if S[l]==0:return l\n"
      "sage:     else:return 0\n"
      "sage: E=[u(l) for l in [0..C-1]]\n"
      "sage: E(p)=[value for value in E if value !=0]\n"
      "sage: def v(l):\n"
      "sage:     if T[l]==0:return l\n"
      "sage:     else:return 0\n"
      "sage: F=[v(l) for l in [0..C-1]]\n"
      "sage: F(p)=[value for value in F if value !=0]\n"
      "sage: def g(p):\n"
      "sage:     if E(p)==F(p): return 4\n"
      "sage:     else: return 5\n"
      "sage: g(p);E(p)\n";
  if (results) {
    out += std::to_string(results->g) + "\n" + detail::python_tuple(results->E) + "\n";
  }
  return out;
}

inline std::string emit_sage_script(std::int64_t d, std::int64_t p, bool with_results = false) {
  const FieldParams fp = make_field(d);
  const PrimeCase pc = make_prime_case(p, fp);
  if (!with_results) return emit_sage_script(pc, d);
  const PrimeReport pr = compute_prime_report(pc);
  return emit_sage_script(pc, d, &pr);
}

}  // namespace ginv
