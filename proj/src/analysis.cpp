#include "histkit/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "histkit/random.hpp"
#include "histkit/tolerances.hpp"

namespace histkit {

namespace {

const Matrix& spin_flip() {
  static const Matrix yy = kron(pauli::y(), pauli::y());
  return yy;
}

void require_two_qubit_density(const Op& rho) {
  if (rho.dim() != 4) throw Error("expected a two-qubit density matrix");
  validate_density(rho, 1.0);
}

// Bell vectors as columns: Phi+, Phi-, Psi+, Psi-.
const Matrix& bell_columns() {
  static const Matrix b = [] {
    const double h = M_SQRT1_2;
    return Matrix{{h, h, 0.0, 0.0}, {0.0, 0.0, h, h}, {0.0, 0.0, h, -h}, {h, -h, 0.0, 0.0}};
  }();
  return b;
}

Ket eigenstate(const Axis& axis, Outcome s, Qubit q) {
  const auto eig = herm_eig(projector(axis, s));
  return Ket::from_amplitudes(q, eig.vectors(0, 0), eig.vectors(1, 0));
}

void draw_amplitudes(rnd::Engine& rng, ProtocolConfig& cfg) {
  const double chi = rnd::uniform(rng, 0.0, M_PI / 2.0);
  cfg.alpha = std::cos(chi);
  cfg.beta = std::sin(chi) * rnd::phase(rng);
  cfg.control_post = rnd::ket(rng, Qubit::C);
}

}  // namespace

std::array<double, 4> wootters_lambdas(const Op& rho) {
  require_two_qubit_density(rho);
  // The lambdas are the singular values of tau = sqrt(rho) Y sqrt(rho)^T, read
  // off the Hermitian block matrix [[0, tau], [tau^dagger, 0]] whose spectrum
  // is {+-sigma_k}.
  const Matrix root = psd_sqrt(rho.matrix());
  const Matrix tau = root * spin_flip() * root.transpose();
  Matrix block(8, 8);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      block(r, 4 + c) = tau(r, c);
      block(4 + c, r) = std::conj(tau(r, c));
    }
  const auto eig = herm_eig(block);
  std::array<double, 4> lam{};
  for (std::size_t k = 0; k < 4; ++k) lam[k] = std::abs(eig.values[k]);
  std::sort(lam.begin(), lam.end(), std::greater<>());
  return lam;
}

double concurrence(const Op& rho) {
  const auto lam = wootters_lambdas(rho);
  return std::clamp(lam[0] - lam[1] - lam[2] - lam[3], 0.0, 1.0);
}

double purity(const Op& rho) { return trace(rho.matrix() * rho.matrix()).real(); }

double concurrence_avg_closed(double g, double theta) {
  const double c = std::cos(theta);
  const double g2 = g * g;
  return g2 * (1.0 + c) / (4.0 * (1.0 + std::sqrt(1.0 - g2)) - g2 * (1.0 - c));
}

BellComponents bell_basis_components(double g, double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  const double g2 = g * g;
  const double root = std::sqrt(1.0 - g2);
  BellComponents out{};
  out.x = g2 * (1.0 - c) * (1.0 - c);
  out.y = -g2 * (1.0 - c) * s;
  out.z = (4.0 * (1.0 - root) - g2) * s * s;
  out.w = g2 * s * s;
  out.norm = (g2 * (1.0 - c) * (1.0 - c) + 2.0 * (1.0 - root) * s * s) / 8.0;
  return out;
}

Matrix bell_basis_matrix(const BellComponents& c) {
  Matrix m{{c.x, 0.0, c.x, c.y}, {0.0, c.z, 0.0, 0.0}, {c.x, 0.0, c.x, c.y}, {c.y, 0.0, c.y, c.w}};
  m *= 1.0 / (16.0 * c.norm);
  return m;
}

Matrix to_bell_basis(const Matrix& m) {
  if (m.rows() != 4 || m.cols() != 4) throw Error("to_bell_basis: two-qubit operator required");
  return bell_columns().adjoint() * m * bell_columns();
}

WoottersClosed wootters_lambdas_closed(double g, double theta) {
  const auto c = bell_basis_components(g, theta);
  return WoottersClosed{c.z / (16.0 * c.norm), c.w / (16.0 * c.norm)};
}

HorodeckiReport horodecki(const Op& rho) {
  require_two_qubit_density(rho);
  const std::array<Matrix, 3> sig{pauli::x(), pauli::y(), pauli::z()};
  HorodeckiReport out{};
  for (std::size_t m = 0; m < 3; ++m)
    for (std::size_t n = 0; n < 3; ++n)
      out.correlations[m][n] = trace(rho.matrix() * kron(sig[m], sig[n])).real();

  Matrix u(3, 3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      double s = 0.0;
      for (std::size_t k = 0; k < 3; ++k) s += out.correlations[k][r] * out.correlations[k][c];
      u(r, c) = s;
    }
  const auto eig = herm_eig(u);
  for (std::size_t k = 0; k < 3; ++k) out.nu[k] = eig.values[k];
  out.gamma = out.nu[0] + out.nu[1];
  out.b_max = 2.0 * std::sqrt(std::max(out.gamma, 0.0));
  out.violating = out.gamma > 1.0 + tol::kBellMargin;
  return out;
}

NuClosed nu_closed(double g, double theta) {
  const double s = std::sqrt(1.0 - g * g);
  const double c = std::cos(theta);
  const double d = 3.0 + s + c - s * c;
  const double d2 = d * d;
  return NuClosed{4.0 * (1.0 + c) * (1.0 + c) / d2, (1.0 - s) * (1.0 - s) * (1.0 + c) * (1.0 + c) / d2,
                  4.0 * (s - c) * (s - c) / d2};
}

double gamma_closed(double g, double theta) {
  const auto nu = nu_closed(g, theta);
  return nu.nu1 + (nu.nu3 >= nu.nu2 ? nu.nu3 : nu.nu2);
}

double crossover_cos(double g) {
  const double s = std::sqrt(1.0 - g * g);
  return (3.0 * s - 1.0) / (3.0 - s);
}

double bell_boundary(double g) {
  if (!(g > 0.0 && g <= 1.0)) throw Error("bell_boundary: g must lie in (0, 1]");
  const double s = std::sqrt(1.0 - g * g);
  const double q = std::sqrt(4.0 + (1.0 - s) * (1.0 - s));
  double arg = (3.0 + s - q) / (q - 1.0 + s);
  if (arg > 1.0 + tol::kArccosSlack || arg < -1.0 - tol::kArccosSlack)
    throw Error("bell_boundary: arccos argument out of range");
  arg = std::clamp(arg, -1.0, 1.0);
  return std::acos(arg);
}

// ---- probe ----

ConfigSampler canonical_sampler() {
  return [](rnd::Engine& rng) {
    const double g = rnd::uniform(rng, 0.0, 1.0);
    const double theta = rnd::uniform(rng, 0.0, 2.0 * M_PI);
    return ProtocolConfig::canonical(g, theta);
  };
}

ConfigSampler general_sampler() {
  return [](rnd::Engine& rng) {
    ProtocolConfig cfg;
    const double mode = rnd::uniform(rng, 0.0, 1.0);
    cfg.g = mode < 0.1 ? 0.0 : rnd::uniform(rng, 0.0, 1.0);
    cfg.branches = Branches{BranchAxes{rnd::axis(rng), rnd::axis(rng)}, BranchAxes{rnd::axis(rng), rnd::axis(rng)}};
    cfg.input_a = rnd::ket(rng, Qubit::A);
    cfg.input_b = rnd::ket(rng, Qubit::B);
    if (mode >= 0.1 && mode < 0.25) {
      // Shared eigenstate on B.
      cfg.branches.one.b = rnd::uniform(rng, 0.0, 1.0) < 0.5 ? cfg.branches.zero.b : -cfg.branches.zero.b;
      cfg.input_b = eigenstate(cfg.branches.zero.b, rnd::uniform(rng, 0.0, 1.0) < 0.5 ? Outcome::Plus : Outcome::Minus,
                               Qubit::B);
    } else if (mode >= 0.25 && mode < 0.4) {
      cfg.branches.one.a = rnd::uniform(rng, 0.0, 1.0) < 0.5 ? cfg.branches.zero.a : -cfg.branches.zero.a;
      cfg.input_a = eigenstate(cfg.branches.zero.a, rnd::uniform(rng, 0.0, 1.0) < 0.5 ? Outcome::Plus : Outcome::Minus,
                               Qubit::A);
    }
    draw_amplitudes(rng, cfg);
    return cfg;
  };
}

ConfigSampler eigenstate_b_sampler() {
  return [](rnd::Engine& rng) {
    ProtocolConfig cfg;
    cfg.g = rnd::uniform(rng, 0.0, 1.0);
    const Axis nb = rnd::axis(rng);
    cfg.branches = Branches{BranchAxes{rnd::axis(rng), nb},
                            BranchAxes{rnd::axis(rng), rnd::uniform(rng, 0.0, 1.0) < 0.5 ? nb : -nb}};
    cfg.input_a = rnd::ket(rng, Qubit::A);
    cfg.input_b = eigenstate(nb, rnd::uniform(rng, 0.0, 1.0) < 0.5 ? Outcome::Plus : Outcome::Minus, Qubit::B);
    draw_amplitudes(rng, cfg);
    return cfg;
  };
}

ProbeReport purity_product_probe(const ConfigSampler& sampler, std::size_t trials, std::uint64_t seed,
                                 std::optional<double> concurrence_bound) {
  if (trials < 1) throw Error("purity_product_probe: trials must be at least 1");
  rnd::Engine rng(seed);
  ProbeReport report;
  report.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    const ProtocolConfig cfg = sampler(rng);
    const Sectors sectors = conditional_states_kraus(cfg);
    Op rho;
    try {
      rho = averaged_state(sectors);
    } catch (const DegeneratePostselection&) {
      ++report.degenerate;
      continue;
    }
    ++report.evaluated;
    const double p = purity(rho);
    const double c = concurrence(rho);
    report.max_concurrence = std::max(report.max_concurrence, c);
    const bool pure = p > 1.0 - 1e-10;
    if (pure) ++report.pure_samples;
    if (pure && c >= 1e-8) report.violations.push_back({t, describe(cfg), p, c, "pure averaged state is entangled"});
    if (concurrence_bound && c > *concurrence_bound + 1e-9)
      report.violations.push_back({t, describe(cfg), p, c, "concurrence exceeds bound"});
  }
  return report;
}

std::string describe(const ProtocolConfig& cfg) {
  auto axis = [](const Axis& a) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "(%.17g,%.17g,%.17g)", a.n()[0], a.n()[1], a.n()[2]);
    return std::string(buf);
  };
  auto amp = [](cplx z) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    return std::string(buf);
  };
  auto ket = [&](const Ket& k) { return "[" + amp(k.amp()[0]) + "," + amp(k.amp()[1]) + "]"; };
  char g[32];
  std::snprintf(g, sizeof g, "%.17g", cfg.g);
  return std::string("g=") + g + " axes0=" + axis(cfg.branches.zero.a) + "/" + axis(cfg.branches.zero.b) +
         " axes1=" + axis(cfg.branches.one.a) + "/" + axis(cfg.branches.one.b) + " alpha=" + amp(cfg.alpha) +
         " beta=" + amp(cfg.beta) + " post=" + ket(cfg.control_post) + " in_a=" + ket(cfg.input_a) +
         " in_b=" + ket(cfg.input_b);
}

}  // namespace histkit
