// ginv: g-invariants of unary Hermitian lattices over imaginary quadratic fields.
//
//   ginv analyze   --d 87
//   ginv survey    --d-max 1000 --threads 0
//   ginv verify    --d-max 300
//   ginv emit-sage --d 87 --p 7

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ginv/ginv.hpp"
#include "ginv/report.hpp"
#include "ginv/sage.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int exit_code_for(const ginv::Error& e) { return ginv::is_domain_error(e.kind()) ? 2 : 1; }

struct Flags {
  std::int64_t d = 0;
  std::int64_t d_max = 0;
  std::int64_t p = 0;
  std::int64_t search_cap = ginv::kDefaultSearchCap;
  std::int64_t verify_margin = 512;
  unsigned threads = 0;
  std::string format = "json";
  bool with_results = false;
};

ginv::SurveyRow survey_row(std::int64_t d, std::int64_t search_cap) {
  ginv::SurveyRow row;
  row.d = d;
  const auto t0 = Clock::now();
  try {
    row.report = ginv::analyze_field(d, search_cap);
  } catch (const ginv::Error& e) {
    row.error = std::string(ginv::to_string(e.kind()));
  }
  row.elapsed_ms = ms_since(t0);
  return row;
}

int cmd_analyze(const Flags& f) {
  const auto t0 = Clock::now();
  const ginv::FieldReport rep = ginv::analyze_field(f.d, f.search_cap);
  const double ms = ms_since(t0);
  if (f.format == "csv") {
    std::cout << ginv::kSurveyHeader << '\n' << ginv::to_csv({f.d, rep, "", ms}) << '\n';
  } else {
    std::cout << ginv::to_json(ginv::make_document(rep, ms)).dump(2) << '\n';
  }
  return 0;
}

int cmd_survey(const Flags& f) {
  std::vector<std::int64_t> ds;
  for (std::int64_t d = 1; d <= f.d_max; ++d) {
    if (ginv::is_square_free(d)) ds.push_back(d);
  }
  std::vector<ginv::SurveyRow> rows(ds.size());
  ginv::parallel_for(ds.size(), f.threads, [&](std::size_t i) { rows[i] = survey_row(ds[i], f.search_cap); });

  if (f.format == "json") {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      if (r.report) {
        arr.push_back(ginv::to_json(ginv::make_document(*r.report, r.elapsed_ms)));
      } else {
        arr.push_back({{"d", r.d}, {"error", r.error}});
      }
    }
    std::cout << arr.dump(2) << '\n';
  } else {
    std::cout << ginv::kSurveyHeader << '\n';
    for (const auto& r : rows) std::cout << ginv::to_csv(r) << '\n';
  }
  return 0;
}

int cmd_verify(const Flags& f) {
  ginv::VerifyOptions opt;
  opt.d_max = f.d_max;
  opt.search_cap = f.search_cap;
  opt.margin = f.verify_margin;
  opt.threads = f.threads;
#ifdef GINV_FAULT_INJECTION
  // test build: perturb every block so the oracle must disagree
  opt.block_fault = [](const ginv::PrimeCase& pc) {
    ginv::BinaryQF b = pc.block;
    b.c += 1;
    return b;
  };
#endif
  const auto t0 = Clock::now();
  const ginv::VerifyResult res = ginv::run_verification(opt);
  std::cerr << "checked " << res.fields << " fields, " << res.prime_cases << " prime cases ("
            << res.split_cases << " split) in " << ginv::format_ms(ms_since(t0)) << " ms\n";
  if (res.ok()) {
    std::cout << "all checks passed\n";
    return 0;
  }
  for (const auto& fail : res.failures) {
    std::cout << "FAIL d=" << fail.d << " p=" << fail.p << " case="
              << (fail.code ? std::string(ginv::to_string(*fail.code)) : std::string("-")) << " check="
              << ginv::to_string(fail.check) << ": " << fail.detail << '\n';
  }
  std::cout << res.failures.size() << " check(s) failed\n";
  return 1;
}

int cmd_emit_sage(const Flags& f) {
  std::cout << ginv::emit_sage_script(f.d, f.p, f.with_results);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"g-invariants of unary Hermitian lattices over imaginary quadratic fields"};
  app.require_subcommand(1);
  Flags f;

  auto add_common = [&f](CLI::App* sub) {
    sub->add_option("--search-cap", f.search_cap, "largest prime tried as a class representative")
        ->check(CLI::PositiveNumber);
    sub->add_option("--threads", f.threads, "worker threads (0 = auto)");
  };

  auto* analyze = app.add_subcommand("analyze", "full report for one field, JSON by default");
  analyze->add_option("--d", f.d, "the field Q(sqrt(-d))")->required();
  analyze->add_option("--format", f.format)->check(CLI::IsMember({"json", "csv"}));
  add_common(analyze);

  auto* survey = app.add_subcommand("survey", "one CSV row per square-free d <= d-max");
  survey->add_option("--d-max", f.d_max)->required();
  survey->add_option("--format", f.format)->check(CLI::IsMember({"json", "csv"}));
  add_common(survey);

  auto* verify = app.add_subcommand("verify", "oracle, conjugate-symmetry and bound checks");
  verify->add_option("--d-max", f.d_max)->required();
  verify->add_option("--verify-margin", f.verify_margin, "window [C, C+margin) checked for coverage");
  add_common(verify);

  auto* sage = app.add_subcommand("emit-sage", "SageMath session for one (d, p)");
  sage->add_option("--d", f.d)->required();
  sage->add_option("--p", f.p)->required();
  sage->add_flag("--with-results", f.with_results, "append the computed g(p) and E(p) output lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  if (survey->parsed() && f.format == "json" && survey->count("--format") == 0) f.format = "csv";

  try {
    if (analyze->parsed()) return cmd_analyze(f);
    if (survey->parsed()) return cmd_survey(f);
    if (verify->parsed()) return cmd_verify(f);
    if (sage->parsed()) return cmd_emit_sage(f);
  } catch (const ginv::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
