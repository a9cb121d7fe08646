// One line per acceptance criterion; exit status is nonzero if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "histkit/analysis.hpp"
#include "histkit/dilation.hpp"
#include "histkit/protocol.hpp"
#include "histkit/sweep.hpp"
#include "histkit/verify.hpp"

using namespace histkit;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Check {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
};

int failures = 0;

void report(int n, const char* title, const Check& r, const std::string& summary) {
  std::printf("[%s] criterion %d: %s :: %s\n", r.ok ? "PASS" : "FAIL", n, title, r.ok ? summary.c_str() : r.note.c_str());
  if (!r.ok) ++failures;
}

double fidelity(const Ket& a, const Ket& b) {
  return std::norm(inner(a.amp(), b.amp())) / (std::real(inner(a.amp(), a.amp())) * std::real(inner(b.amp(), b.amp())));
}

const Ket kPhiMinus({Qubit::A, Qubit::B}, {M_SQRT1_2, 0.0, 0.0, -M_SQRT1_2});

// 50 x 50 over g in [0.02, 1], theta in [0.05, pi]; every point non-degenerate.
SweepSpec grid() {
  SweepSpec s;
  s.g = GridAxis{0.02, 1.0, 50};
  s.theta = GridAxis{0.05, M_PI, 50};
  return s;
}

std::string pt(double g, double t) { return "g=" + format_double(g) + " theta=" + format_double(t); }

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

// Completeness bookkeeping shared by criteria 3, 6 and 7.
double worst_completeness = 0.0;
std::size_t completeness_configs = 0;
std::string completeness_note;

void record_completeness(const ProtocolConfig& cfg) {
  const double w = total_weight(conditional_states_kraus(cfg)) +
                   total_weight(conditional_states_kraus(with_complementary_postselection(cfg)));
  const double err = std::abs(w - 1.0);
  if (err > worst_completeness) {
    worst_completeness = err;
    completeness_note = describe(cfg);
  }
  ++completeness_configs;
}

void criterion1() {
  Check r;
  std::mt19937_64 rng(kSeed + 1);
  std::uniform_real_distribution<double> ug(0.05, 1.0), ut(0.2, M_PI - 0.2);
  double worst_c = 0.0, worst_f = 0.0;
  int sectors = 0;
  for (int k = 0; k < 20; ++k) {
    const double g = ug(rng), theta = ut(rng);
    const Sectors s = conditional_states_kraus(ProtocolConfig::canonical(g, theta));
    for (std::size_t idx : {0u, 3u}) {
      const Ket psi = s[idx].psi.normalized();
      const double dc = std::abs(concurrence(density_of(psi)) - 1.0);
      const double df = 1.0 - fidelity(psi, kPhiMinus);
      worst_c = std::max(worst_c, dc);
      worst_f = std::max(worst_f, df);
      r.require(dc <= 1e-10 && df <= 1e-10, "sector " + std::to_string(idx) + " at " + pt(g, theta));
      ++sectors;
    }
  }
  report(1, "Bell sectors are maximally entangled", r,
         std::to_string(sectors) + " sectors, max |C-1| " + sci(worst_c) + ", max 1-F " + sci(worst_f));
}

Check closed_concurrence_check(const ClosedConcurrence& closed, std::string& summary) {
  Check r;
  double worst = 0.0, grid_max = 0.0;
  for (const auto& p : evaluate_grid(grid())) {
    if (!p.c_numeric) {
      r.require(false, "undefined grid point " + pt(p.g, p.theta));
      continue;
    }
    const double c = closed(p.g, p.theta);
    const double err = std::abs(c - *p.c_numeric);
    worst = std::max(worst, err);
    grid_max = std::max({grid_max, c, *p.c_numeric});
    r.require(err <= 1e-9, "|closed - numeric| = " + sci(err) + " at " + pt(p.g, p.theta));
  }
  r.require(grid_max <= 0.5 + 1e-9, "grid maximum " + format_double(grid_max));
  const double edge = closed(1.0, 0.05);
  const double edge_numeric = evaluate_point(1.0, 0.05).c_numeric.value_or(0.0);
  r.require(edge >= 0.49 && edge_numeric >= 0.49, "value at g=1 theta=0.05 is " + format_double(edge));
  summary = "max error " + sci(worst) + ", grid max " + format_double(grid_max) + ", C(1, 0.05) = " + format_double(edge);
  return r;
}

void criterion2() {
  std::string summary;
  const Check r = closed_concurrence_check(concurrence_avg_closed, summary);
  report(2, "closed-form concurrence matches Wootters on 50x50 grid", r, summary);
}

void criterion3() {
  Check r;
  std::mt19937_64 rng(kSeed + 3);
  const ConfigSampler general = general_sampler(), canonical = canonical_sampler();
  double worst_w = 0.0, worst_f = 0.0, worst_k = 0.0;
  for (int k = 0; k < 50; ++k) {
    const ProtocolConfig cfg = (k % 2 ? general : canonical)(rng);
    record_completeness(cfg);
    const Sectors kr = conditional_states_kraus(cfg), dl = conditional_states_dilation(cfg);
    for (std::size_t s = 0; s < 4; ++s) {
      const double dw = std::abs(kr[s].weight - dl[s].weight);
      worst_w = std::max(worst_w, dw);
      r.require(dw <= 1e-12, "weight mismatch " + describe(cfg));
      if (kr[s].weight > 1e-14) {
        const double df = 1.0 - fidelity(kr[s].psi, dl[s].psi);
        worst_f = std::max(worst_f, df);
        r.require(df <= 1e-10, "state mismatch " + describe(cfg));
      }
    }
  }
  std::uniform_real_distribution<double> ujt(0.0, M_PI / 4), utau(0.5, 2.0), uz(-1.0, 1.0), uphi(0.0, 2 * M_PI);
  for (int k = 0; k < 50; ++k) {
    const double tau = utau(rng), jtau = ujt(rng), z = uz(rng), phi = uphi(rng);
    const Axis n = Axis::normalized(std::sqrt(1 - z * z) * std::cos(phi), std::sqrt(1 - z * z) * std::sin(phi), z);
    const DilationParams p{jtau / tau, tau, n};
    const auto ext = extract_kraus(unitary_sd(p));
    const KrausPair kp = kraus_pair(std::cos(2 * jtau), n);
    const double err = std::max(max_abs_diff(fix_gauge(ext.plus), fix_gauge(kp.plus)),
                                max_abs_diff(fix_gauge(ext.minus), fix_gauge(kp.minus)));
    worst_k = std::max(worst_k, err);
    r.require(err <= 1e-12, "Kraus extraction at J*tau=" + format_double(jtau));
  }
  report(3, "Kraus path agrees with the five-qubit unitary", r,
         "50 configs, max weight diff " + sci(worst_w) + ", max 1-F " + sci(worst_f) + ", max Kraus error " +
             sci(worst_k));
}

void criterion4() {
  Check r;
  double worst = 0.0;
  const SweepSpec s = grid();
  for (std::size_t a = 0; a < s.g.steps; ++a)
    for (std::size_t b = 0; b < s.theta.steps; ++b) {
      const double g = s.g.at(a), theta = s.theta.at(b);
      const Sectors sec = conditional_states_kraus(ProtocolConfig::canonical(g, theta));
      const double err = std::abs(p_bell(g, theta) - (sec[0].weight + sec[3].weight));
      worst = std::max(worst, err);
      r.require(err <= 1e-12, "P_Bell mismatch at " + pt(g, theta));
    }
  const Sectors spot = conditional_states_kraus(ProtocolConfig::canonical(1.0, M_PI / 2));
  const double simulated = spot[0].weight + spot[3].weight;
  r.require(std::abs(p_bell(1.0, M_PI / 2) - 0.125) <= 1e-12 && std::abs(simulated - 0.125) <= 1e-12,
            "P_Bell(1, pi/2) = " + format_double(simulated));
  report(4, "P_Bell closed form", r, "max error " + sci(worst) + ", P_Bell(1, pi/2) = " + format_double(simulated));
}

void criterion5() {
  Check r;
  double worst_g = 0.0, worst_b = 0.0, worst_nu3 = -INFINITY;
  std::size_t nu3_points = 0;
  for (const auto& p : evaluate_grid(grid())) {
    if (!p.gamma_numeric) {
      r.require(false, "undefined grid point " + pt(p.g, p.theta));
      continue;
    }
    const double err = std::abs(p.gamma_closed - *p.gamma_numeric);
    worst_g = std::max(worst_g, err);
    r.require(err <= 1e-9, "gamma mismatch at " + pt(p.g, p.theta));
    const NuClosed nu = nu_closed(p.g, p.theta);
    if (nu.nu3 >= nu.nu2) {
      ++nu3_points;
      worst_nu3 = std::max(worst_nu3, nu.nu1 + nu.nu3);
      r.require(nu.nu1 + nu.nu3 <= 1.0 + 1e-12, "nu1 + nu3 exceeds 1 at " + pt(p.g, p.theta));
    }
  }
  const GridAxis gs{0.02, 1.0, 50};
  for (std::size_t a = 0; a < gs.steps; ++a) {
    const double g = gs.at(a), tb = bell_boundary(g);
    const double err = std::abs(gamma_closed(g, tb) - 1.0);
    const double err_numeric = std::abs(evaluate_point(g, tb).gamma_numeric.value_or(INFINITY) - 1.0);
    worst_b = std::max({worst_b, err, err_numeric});
    r.require(err <= 1e-9 && err_numeric <= 1e-9, "boundary gamma off at g=" + format_double(g));
  }
  report(5, "Horodecki gamma, boundary and nu3 branch", r,
         "max gamma error " + sci(worst_g) + ", max boundary error " + sci(worst_b) + ", nu3 branch max " +
             format_double(worst_nu3) + " over " + std::to_string(nu3_points) + " points");
}

void criterion6() {
  Check r;
  const ConfigSampler general = general_sampler();
  std::mt19937_64 rng(kSeed + 6);
  std::size_t offenders = 0, pure = 0, evaluated = 0;
  for (int k = 0; k < 1000; ++k) {
    const ProtocolConfig cfg = general(rng);
    record_completeness(cfg);
    const Sectors s = conditional_states_kraus(cfg);
    if (total_weight(s) <= 1e-14) continue;
    ++evaluated;
    const Op rho = averaged_state(s);
    const bool is_pure = purity(rho) > 1.0 - 1e-10;
    if (is_pure) ++pure;
    if (is_pure && concurrence(rho) > 1e-8) {
      ++offenders;
      r.require(false, "pure entangled average " + describe(cfg));
    }
  }
  const ConfigSampler eig = eigenstate_b_sampler();
  double worst_eig = 0.0;
  std::size_t eig_configs = 0;
  for (int k = 0; k < 200; ++k) {
    const ProtocolConfig cfg = eig(rng);
    const Sectors s = conditional_states_kraus(cfg);
    if (total_weight(s) <= 1e-14) continue;
    ++eig_configs;
    const double c = concurrence(averaged_state(s));
    worst_eig = std::max(worst_eig, c);
    r.require(c < 1e-10, "eigenstate input entangled " + describe(cfg));
  }
  r.require(pure > 0, "no pure averaged states were sampled");
  report(6, "pure averaged states are never entangled", r,
         std::to_string(evaluated) + " of 1000 evaluated, " + std::to_string(pure) + " pure, " +
             std::to_string(offenders) + " offenders; eigenstate max C " + sci(worst_eig) + " over " +
             std::to_string(eig_configs));
}

void criterion7() {
  Check r;
  r.require(completeness_configs > 0, "no configurations tested");
  r.require(worst_completeness <= 1e-12, "sum " + sci(worst_completeness) + " off for " + completeness_note);
  report(7, "probabilities over both control outcomes sum to one", r,
         std::to_string(completeness_configs) + " configs, max |sum-1| " + sci(worst_completeness));
}

void criterion8() {
  std::string summary;
  const Check flipped = closed_concurrence_check(concurrence_avg_closed_sign_flipped, summary);
  Check r;
  r.require(!flipped.ok, "sign-flipped formula passed criterion 2");
  report(8, "sign-flipped closed form is rejected", r, "rejected: " + flipped.note);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  std::printf("%d of 8 criteria passed\n", 8 - failures);
  return failures == 0 ? 0 : 1;
}
