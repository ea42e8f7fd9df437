// Prints class representatives and exception sets for one field.
//   field_report 87

#include <cstdlib>
#include <iostream>

#include "ginv/ginv.hpp"

int main(int argc, char** argv) {
  const std::int64_t d = argc > 1 ? std::atoll(argv[1]) : 87;
  const ginv::FieldReport rep = ginv::analyze_field(d);
  std::cout << "Q(sqrt(-" << d << ")): class number " << rep.class_number << ", g = " << rep.g_d << " ("
            << ginv::to_string(rep.g_source) << ")\n";
  for (std::size_t i = 0; i < rep.class_reps.size(); ++i) {
    const auto& cr = rep.class_reps[i];
    std::cout << "  class " << i << " " << cr.form;
    if (cr.is_principal) {
      std::cout << "  principal, every r\n";
      continue;
    }
    const auto& pr = rep.prime_reports.at(*cr.p);
    std::cout << "  p=" << *cr.p << " " << ginv::to_string(pr.prime_case.code) << " C=" << pr.prime_case.C
              << " g(p)=" << pr.g << "  r not in {";
    for (std::size_t k = 0; k < pr.E.size(); ++k) std::cout << (k ? "," : "") << pr.E[k];
    std::cout << "}\n";
  }
}
