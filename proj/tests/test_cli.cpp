#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run(const std::string& exe, const std::string& args, bool merge_stderr = false) {
  const std::string cmd = exe + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

const std::string kCli = GINV_CLI_PATH;
const std::string kFaultCli = GINV_FAULT_CLI_PATH;

}  // namespace

TEST(Cli, AnalyzeWorkedExample) {
  const CliRun r = run(kCli, "analyze --d 87");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["g"], 4);
  EXPECT_EQ(j["class_number"], 6);
  std::set<std::int64_t> primes;
  for (const auto& c : j["classes"])
    if (!c["prime"].is_null()) primes.insert(c["prime"].get<std::int64_t>());
  EXPECT_EQ(primes, (std::set<std::int64_t>{2, 3, 7}));
}

TEST(Cli, AnalyzeClassNumberOne) {
  const CliRun r = run(kCli, "analyze --d 1");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["g"], 2);
  EXPECT_EQ(j["g_source"], "table");
  EXPECT_EQ(j["classes"].size(), 1u);
}

TEST(Cli, AnalyzeIsStableExceptTiming) {
  auto a = nlohmann::json::parse(run(kCli, "analyze --d 230").out);
  auto b = nlohmann::json::parse(run(kCli, "analyze --d 230").out);
  a.erase("elapsed_ms");
  b.erase("elapsed_ms");
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(Cli, AnalyzeRejectsNonSquareFree) {
  const CliRun r = run(kCli, "analyze --d 12", true);
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("d must be square-free"), std::string::npos);
}

TEST(Cli, SurveyRows) {
  const CliRun r = run(kCli, "survey --d-max 907 --threads 2");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("d,discriminant,class_number,g_d,g_source,primes,max_C,elapsed_ms,error\n", 0), 0u);
  EXPECT_NE(r.out.find("\n87,-87,6,4,algorithm,2;3;7,263,"), std::string::npos);
  EXPECT_NE(r.out.find("\n907,-907,3,5,table,"), std::string::npos);
  EXPECT_NE(r.out.find("\n2,-8,1,2,table,"), std::string::npos);
  EXPECT_EQ(r.out.find("\n4,"), std::string::npos);  // not square-free
  // rows in increasing d
  std::int64_t last = 0;
  std::size_t pos = r.out.find('\n') + 1;
  while (pos < r.out.size()) {
    const std::int64_t d = std::stoll(r.out.substr(pos));
    EXPECT_GT(d, last);
    last = d;
    pos = r.out.find('\n', pos) + 1;
  }
  EXPECT_EQ(last, 907);
}

TEST(Cli, VerifyPassesAndVacuousCase) {
  const CliRun r = run(kCli, "verify --d-max 100");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
  const CliRun v = run(kCli, "verify --d-max 0");
  EXPECT_EQ(v.status, 0);
  EXPECT_NE(v.out.find("all checks passed"), std::string::npos);
}

TEST(Cli, VerifyCatchesInjectedFault) {
  const CliRun r = run(kFaultCli, "verify --d-max 30");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("FAIL d=5 p=2 case=C3_TwoD1mod4"), std::string::npos) << r.out;
}

TEST(Cli, EmitSage) {
  const CliRun r = run(kCli, "emit-sage --d 87 --p 2");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("sage: p=2; d=87; C=(1+d)/2\n", 0), 0u);
  const CliRun s = run(kCli, "emit-sage --d 87 --p 7");
  EXPECT_EQ(s.out.rfind("sage: p=7; d=87; n=5;", 0), 0u);
  EXPECT_EQ(run(kCli, "emit-sage --d 19 --p 2").status, 2);
}
