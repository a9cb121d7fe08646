#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace histkit {

using ClosedConcurrence = std::function<double(double g, double theta)>;

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 100;  // random samples per randomized suite
  int threads = 0;           // grid evaluation threads, 0 = auto
  // Closed-form concurrence under test; replaced by fault injection.
  ClosedConcurrence closed_concurrence;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  double worst = 0.0;  // largest error/tolerance ratio seen
  std::string detail;  // first failure
};

struct VerifyReport {
  std::vector<SuiteResult> suites;
  bool passed() const;
};

// Names of all suites, in execution order.
std::vector<std::string> suite_names();

VerifyReport run_verification(const VerifyOptions& options);

// One line per suite, then a summary line. Deterministic for fixed options.
void print_report(std::ostream& os, const VerifyReport& report, bool quiet = false);

// Closed-form concurrence with the sign of cos(theta) flipped in the
// numerator; a negative control for the closed-form suite.
double concurrence_avg_closed_sign_flipped(double g, double theta);

}  // namespace histkit
