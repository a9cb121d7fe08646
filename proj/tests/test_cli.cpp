#include <gtest/gtest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#ifndef HISTKIT_CLI
#error "HISTKIT_CLI must name the histkit executable"
#endif

namespace {

struct CliResult {
  int code;
  std::string out;
};

CliResult run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + HISTKIT_CLI + std::string(" ") + args + " 2>/dev/null";
  FILE* p = ::popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int status = ::pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("histkit_cli_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(Cli, PointJson) {
  const CliResult r = run("point --g 0.6 --theta 1.5707963 --format json");
  ASSERT_EQ(r.code, 0);
  const auto rec = nlohmann::json::parse(r.out).at("records").at(0);
  EXPECT_NEAR(rec.at("C_closed").get<double>(), 0.0526316, 1e-7);
  EXPECT_NEAR(rec.at("C_numeric").get<double>(), 0.0526316, 1e-7);
  EXPECT_EQ(rec.at("status"), "ok");
}

TEST(Cli, PointProjectiveQuarterTurn) {
  const CliResult r = run("point --g 1 --theta 1.5707963 --format json");
  ASSERT_EQ(r.code, 0);
  const auto rec = nlohmann::json::parse(r.out).at("records").at(0);
  EXPECT_NEAR(rec.at("gamma_numeric").get<double>(), 5.0 / 9.0, 1e-6);
  EXPECT_EQ(rec.at("violating").get<bool>(), false);
}

TEST(Cli, PointHalfTurnVanishes) {
  const CliResult r = run("point --g 0.5 --theta 3.141592653589793 --format json");
  ASSERT_EQ(r.code, 0);
  const auto rec = nlohmann::json::parse(r.out).at("records").at(0);
  EXPECT_EQ(rec.at("status"), "ok");
  EXPECT_NEAR(rec.at("C_numeric").get<double>(), 0.0, 1e-12);
  EXPECT_NEAR(rec.at("C_closed").get<double>(), 0.0, 1e-12);
}

TEST(Cli, DegeneratePointIsUndefinedNotError) {
  const CliResult r = run("point --g 0.4 --theta 0");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(",undefined,"), std::string::npos);
}

TEST(Cli, DegreesConvertOnInput) {
  EXPECT_EQ(run("point --g 0.7 --theta 90 --degrees").out, run("point --g 0.7 --theta 1.5707963267948966").out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("point --g 0.5").code, 2);
  EXPECT_EQ(run("point --g 1.5 --theta 1").code, 2);
  EXPECT_EQ(run("point --g 0.5 --theta 1 --format xml").code, 2);
  EXPECT_EQ(run("sweep --grid 0:1,0:1:5").code, 2);
  EXPECT_EQ(run("sweep --grid 0:1:1,0:1:5").code, 2);
  EXPECT_EQ(run("sweep --outputs entropy").code, 2);
  EXPECT_EQ(run("verify --trials 0").code, 2);
  EXPECT_EQ(run("verify --inject-fault nothing").code, 2);
}

TEST(Cli, SweepUnwritablePathFails) {
  EXPECT_NE(run("sweep --grid 0:1:3,0:1:3 --out /nonexistent-dir/x.csv").code, 0);
}

TEST(Cli, SweepDeterministicAcrossThreadCounts) {
  const auto a = scratch("a.csv"), b = scratch("b.csv");
  ASSERT_EQ(run("sweep --grid 0:1:12,0:3.141592653589793:12 --outputs concurrence,gamma,boundary --out " + a.string(),
                "HISTKIT_THREADS=1")
                .code,
            0);
  ASSERT_EQ(run("sweep --grid 0:1:12,0:3.141592653589793:12 --outputs concurrence,gamma,boundary --out " + b.string(),
                "HISTKIT_THREADS=4")
                .code,
            0);
  const std::string ta = slurp(a);
  EXPECT_FALSE(ta.empty());
  EXPECT_EQ(ta, slurp(b));
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST(Cli, SweepZeroStrengthRowIsZero) {
  const CliResult r = run("sweep --grid 0:1:2,0.1:3:4 --outputs concurrence --format json");
  ASSERT_EQ(r.code, 0);
  for (const auto& rec : nlohmann::json::parse(r.out).at("records"))
    if (rec.at("g").get<double>() == 0.0) {
      EXPECT_EQ(rec.at("C_closed").get<double>(), 0.0);
      EXPECT_EQ(rec.at("status"), "undefined");
    }
}

TEST(Cli, DilationCrossCheck) {
  const CliResult r = run("dilation --g 0.35 --theta 2.2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("agree"), std::string::npos);
}

TEST(Cli, VerifyDefaultPassesAndIsReproducible) {
  const CliResult a = run("verify --seed 5 --trials 20");
  const CliResult b = run("verify --seed 5 --trials 20");
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, VerifyNegativeControlFails) {
  const CliResult r = run("verify --trials 5 --quiet --inject-fault closed-form-sign");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("[FAIL] analysis.closed_form_concurrence"), std::string::npos);
  EXPECT_NE(r.out.find("g="), std::string::npos);
}
