#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "histkit/analysis.hpp"
#include "histkit/dilation.hpp"
#include "histkit/protocol.hpp"
#include "histkit/sweep.hpp"
#include "histkit/verify.hpp"

using namespace histkit;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kIo = 3;

struct UsageError : Error {
  using Error::Error;
};

GridAxis parse_axis(const std::string& text, const char* what) {
  std::istringstream ss(text);
  std::string lo, hi, n;
  if (!std::getline(ss, lo, ':') || !std::getline(ss, hi, ':') || !std::getline(ss, n) || n.empty())
    throw UsageError(std::string("--grid: ") + what + " range must look like min:max:steps");
  try {
    std::size_t used = 0;
    GridAxis axis{std::stod(lo), std::stod(hi), static_cast<std::size_t>(std::stoul(n, &used))};
    if (used != n.size()) throw std::invalid_argument(n);
    return axis;
  } catch (const std::logic_error&) {
    throw UsageError(std::string("--grid: cannot parse ") + what + " range '" + text + "'");
  }
}

void parse_grid(const std::string& text, SweepSpec& spec, bool degrees) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--grid expects g0:g1:n,t0:t1:m");
  spec.g = parse_axis(text.substr(0, comma), "g");
  spec.theta = parse_axis(text.substr(comma + 1), "theta");
  if (degrees) {
    spec.theta.min *= M_PI / 180.0;
    spec.theta.max *= M_PI / 180.0;
  }
}

void emit(std::ostream& os, const std::vector<PointRecord>& rows, const OutputSet& outputs, const std::string& format) {
  if (format == "json") write_json(os, rows, outputs);
  else write_csv(os, rows, outputs);
}

void check_point(double g, double theta) {
  if (!(g >= 0.0 && g <= 1.0)) throw UsageError("--g must lie in [0, 1]");
  if (!(theta >= 0.0 && theta <= 2.0 * M_PI)) throw UsageError("--theta must lie in [0, 2 pi]");
}

int cmd_point(double g, double theta, bool degrees, const std::string& format) {
  if (degrees) theta *= M_PI / 180.0;
  check_point(g, theta);
  emit(std::cout, {evaluate_point(g, theta)}, OutputSet{}, format);
  return kOk;
}

int cmd_sweep(SweepSpec spec, const std::string& grid, const std::string& outputs, bool degrees,
              const std::string& out, const std::string& format) {
  if (!grid.empty()) parse_grid(grid, spec, degrees);
  if (!outputs.empty()) spec.outputs = OutputSet::parse(outputs);
  try {
    spec.validate();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const auto rows = evaluate_grid(spec, thread_count_from_env());
  if (out.empty() || out == "-") {
    emit(std::cout, rows, spec.outputs, format);
    return kOk;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) {
    std::cerr << "histkit: cannot open " << out << " for writing\n";
    return kIo;
  }
  emit(file, rows, spec.outputs, format);
  file.close();
  if (!file) {
    std::cerr << "histkit: write to " << out << " failed\n";
    return kIo;
  }
  return kOk;
}

int cmd_dilation(double g, double theta, bool degrees) {
  if (degrees) theta *= M_PI / 180.0;
  check_point(g, theta);
  const ProtocolConfig cfg = ProtocolConfig::canonical(g, theta);
  const Sectors kr = conditional_states_kraus(cfg), dl = conditional_states_dilation(cfg);
  bool ok = true;
  std::printf("sector,P_kraus,P_dilation,abs_diff,fidelity\n");
  for (std::size_t s = 0; s < 4; ++s) {
    const double diff = std::abs(kr[s].weight - dl[s].weight);
    double fid = NAN;
    if (kr[s].weight > 1e-14) {
      const cplx ov = inner(kr[s].psi.amp(), dl[s].psi.amp());
      fid = std::norm(ov) / (kr[s].weight * dl[s].weight);
      ok = ok && fid >= 1.0 - 1e-10;
    }
    ok = ok && diff <= 1e-12;
    std::printf("%s%s,%s,%s,%s,%s\n", symbol(kr[s].i), symbol(kr[s].j), format_double(kr[s].weight).c_str(),
                format_double(dl[s].weight).c_str(), format_double(diff).c_str(),
                std::isnan(fid) ? "" : format_double(fid).c_str());
  }
  const auto ext = extract_kraus(unitary_sd(DilationParams::from_strength(g, Axis::x())));
  const KrausPair kp = kraus_pair(g, Axis::x());
  const double kerr = std::max(max_abs_diff(fix_gauge(ext.plus), fix_gauge(kp.plus)),
                               max_abs_diff(fix_gauge(ext.minus), fix_gauge(kp.minus)));
  ok = ok && kerr <= 1e-12;
  std::printf("kraus_extraction_error,%s\n", format_double(kerr).c_str());
  std::printf("%s\n", ok ? "agree" : "MISMATCH");
  return ok ? kOk : kVerifyFailed;
}

int cmd_verify(std::uint64_t seed, std::size_t trials, bool quiet, const std::string& fault) {
  if (trials < 1) throw UsageError("--trials must be at least 1");
  VerifyOptions opt;
  opt.seed = seed;
  opt.trials = trials;
  opt.threads = thread_count_from_env();
  if (fault == "closed-form-sign") opt.closed_concurrence = concurrence_avg_closed_sign_flipped;
  else if (!fault.empty()) throw UsageError("unknown fault '" + fault + "'");
  const VerifyReport report = run_verification(opt);
  print_report(std::cout, report, quiet);
  return report.passed() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"histkit: measurement-induced entanglement under coherent control"};
  app.require_subcommand(1);

  double g = 0.0, theta = 0.0;
  bool degrees = false;
  std::string format = "csv";
  const std::vector<std::string> formats{"csv", "json"};

  auto* point = app.add_subcommand("point", "Evaluate one (g, theta) point");
  point->add_option("--g", g, "Measurement strength in [0, 1]")->required();
  point->add_option("--theta", theta, "Axis angle (radians)")->required();
  point->add_flag("--degrees", degrees, "Read --theta in degrees");
  point->add_option("--format", format)->check(CLI::IsMember(formats));

  SweepSpec spec;
  std::string grid, outputs, out;
  auto* sweep = app.add_subcommand("sweep", "Evaluate a (g, theta) grid");
  sweep->add_option("--grid", grid, "g0:g1:n,t0:t1:m (default 0:1:50,0:pi:50)");
  sweep->add_option("--outputs", outputs, "Comma list of concurrence,gamma,p_bell,boundary");
  sweep->add_option("--out", out, "Output path (default stdout)");
  sweep->add_option("--format", format)->check(CLI::IsMember(formats));
  sweep->add_flag("--degrees", degrees, "Read theta ranges in degrees");

  auto* dil = app.add_subcommand("dilation", "Compare Kraus and five-qubit unitary paths at one point");
  dil->add_option("--g", g)->required();
  dil->add_option("--theta", theta)->required();
  dil->add_flag("--degrees", degrees);

  std::uint64_t seed = 1;
  std::size_t trials = 100;
  bool quiet = false;
  std::string fault;
  auto* verify = app.add_subcommand("verify", "Run every verification suite");
  verify->add_option("--seed", seed);
  verify->add_option("--trials", trials);
  verify->add_flag("--quiet", quiet, "Only print failing suites");
  verify->add_option("--inject-fault", fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*point) return cmd_point(g, theta, degrees, format);
    if (*sweep) return cmd_sweep(spec, grid, outputs, degrees, out, format);
    if (*dil) return cmd_dilation(g, theta, degrees);
    if (*verify) return cmd_verify(seed, trials, quiet, fault);
  } catch (const UsageError& e) {
    std::cerr << "histkit: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "histkit: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
