#include "histkit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "histkit/analysis.hpp"
#include "histkit/dilation.hpp"
#include "histkit/measurement.hpp"
#include "histkit/oracle.hpp"
#include "histkit/protocol.hpp"
#include "histkit/random.hpp"
#include "histkit/sweep.hpp"
#include "histkit/tolerances.hpp"

namespace histkit {

namespace {

class Tally {
 public:
  explicit Tally(SuiteResult& r) : r_(r) {}

  template <class Where>
  void within(double err, double tolerance, Where&& where) {
    ++r_.checks;
    const double ratio = std::isnan(err) ? INFINITY : err / tolerance;
    r_.worst = std::max(r_.worst, ratio);
    if (!(err <= tolerance)) fail(where() + ": error " + format_double(err) + " > " + format_double(tolerance));
  }

  template <class Where>
  void expect(bool ok, Where&& where) {
    ++r_.checks;
    if (!ok) fail(where());
  }

 private:
  void fail(const std::string& what) {
    if (r_.passed) r_.detail = what;
    r_.passed = false;
  }
  SuiteResult& r_;
};

std::string at(double g, double theta) { return "g=" + format_double(g) + " theta=" + format_double(theta); }

// The standard comparison grid g in [0.02, 1], theta in [0.05, pi].
SweepSpec standard_grid() {
  SweepSpec spec;
  spec.g = GridAxis{0.02, 1.0, 50};
  spec.theta = GridAxis{0.05, M_PI, 50};
  return spec;
}

double phase_fidelity(const Ket& a, const Ket& b) {
  const double na = std::real(inner(a.amp(), a.amp())), nb = std::real(inner(b.amp(), b.amp()));
  return std::norm(inner(a.amp(), b.amp())) / (na * nb);
}

const Ket& phi_minus() {
  static const Ket k({Qubit::A, Qubit::B}, {M_SQRT1_2, 0.0, 0.0, -M_SQRT1_2});
  return k;
}

using Suite = void (*)(Tally&, rnd::Engine&, const VerifyOptions&);

// ---- qcore ----

void tensor_associativity(Tally& t, rnd::Engine& rng, const VerifyOptions& o) {
  for (std::size_t k = 0; k < o.trials; ++k) {
    const Op a = rnd::density(rng, {Qubit::C}), b = rnd::density(rng, {Qubit::A}), c = rnd::density(rng, {Qubit::B});
    t.within(max_abs_diff(tensor(tensor(a, b), c).matrix(), tensor(a, tensor(b, c)).matrix()), 1e-14,
             [&] { return "ops trial " + std::to_string(k); });
    const Ket x = rnd::ket(rng, Qubit::C), y = rnd::ket(rng, Qubit::A), z = rnd::ket(rng, Qubit::B);
    const Ket l = tensor(tensor(x, y), z), r = tensor(x, tensor(y, z));
    double err = 0.0;
    for (std::size_t i = 0; i < l.dim(); ++i) err = std::max(err, std::abs(l.amp()[i] - r.amp()[i]));
    t.within(err, 1e-14, [&] { return "kets trial " + std::to_string(k); });
  }
}

void partial_trace_product(Tally& t, rnd::Engine& rng, const VerifyOptions& o) {
  for (std::size_t k = 0; k < o.trials; ++k) {
    const Op ra = rnd::density(rng, {Qubit::A});
    const Op rb = rnd::density(rng, {Qubit::B, Qubit::DB});
    const double wb = 0.3 + rnd::uniform(rng, 0.0, 1.0);
    const Op scaled_b(rb.labels(), cplx{wb} * rb.matrix());
    const Op reduced = partial_trace(tensor(ra, scaled_b), {Qubit::A});
    t.within(max_abs_diff(reduced.matrix(), cplx{wb} * ra.matrix()), 1e-12,
             [&] { return "trial " + std::to_string(k); });
  }
  // Four-index contraction oracle on the averaged canonical state.
  const Op rho = averaged_state(conditional_states_kraus(ProtocolConfig::canonical(0.6, M_PI / 2)));
  t.within(max_abs_diff(partial_trace(rho, {Qubit::A}).matrix(), oracle::trace_out_second(rho.matrix())), 1e-14,
           [] { return std::string("averaged state g=0.6 theta=pi/2"); });
}

void herm_eig_reconstruction(Tally& t, rnd::Engine& rng, const VerifyOptions& o) {
  const std::size_t sizes[] = {2, 3, 4, 8, 16, 32};
  for (std::size_t k = 0; k < o.trials; ++k) {
    const std::size_t n = sizes[k % std::size(sizes)];
    const Matrix h = rnd::hermitian(rng, n);
    const auto eig = herm_eig(h);
    const Matrix back = eig.vectors * Matrix::diagonal(eig.values) * eig.vectors.adjoint();
    t.within(max_abs_diff(back, h), 1e-10, [&] { return "reconstruction n=" + std::to_string(n); });
    t.within(max_abs_diff(eig.vectors.adjoint() * eig.vectors, Matrix::identity(n)), 1e-10,
             [&] { return "unitarity n=" + std::to_string(n); });
    t.expect(std::is_sorted(eig.values.begin(), eig.values.end(), std::greater<>()),
             [&] { return "ordering n=" + std::to_string(n); });
  }
}

void psd_sqrt_projector(Tally& t, rnd::Engine& rng, const VerifyOptions& o) {
  const std::size_t sizes[] = {2, 4, 8, 16, 32};
  for (std::size_t k = 0; k < o.trials; ++k) {
    const std::size_t n = sizes[k % std::size(sizes)];
    const auto basis = herm_eig(rnd::hermitian(rng, n));
    const std::size_t rank = 1 + k % n;
    Matrix p(n, n);
    for (std::size_t c = 0; c < rank; ++c)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) p(r, s) += basis.vectors(r, c) * std::conj(basis.vectors(s, c));
    t.within(max_abs_diff(psd_sqrt(p), p), 1e-12,
             [&] { return "n=" + std::to_string(n) + " rank=" + std::to_string(rank); });
  }
}

// ---- measurement ----

void measurement_completeness(Tally& t, rnd::Engine& rng, const VerifyOptions& o) {
  for (std::size_t k = 0; k < o.trials; ++k) {
    const double g = rnd::uniform(rng, 0.0, 1.0);
    const KrausPair kp = kraus_pair(g, rnd::axis(rng));
    const Ket phi = rnd::ket(rng, Qubit::A);
    t.within(std::abs(born_prob(phi, kp.plus) + born_prob(phi, kp.minus) - 1.0), 1e-12,
             [&] { return "probabilities g=" + format_double(g); });
    t.within(max_abs_diff(kp.plus.adjoint() * kp.plus + kp.minus.adjoint() * kp.minus, pauli::i2()), 1e-12,
             [&] { return "operators g=" + format_double(g); });
  }
}

void measurement_factorization(Tally& t, rnd::Engine& rng, const VerifyOptions& o) {
  for (std::size_t k = 0; k < o.trials; ++k) {
    const double g = rnd::uniform(rng, 0.0, 1.0);
    const KrausPair ka = kraus_pair(g, rnd::axis(rng)), kb = kraus_pair(g, rnd::axis(rng));
    const Ket pa = rnd::ket(rng, Qubit::A), pb = rnd::ket(rng, Qubit::B);
    const Ket joint = tensor(pa, pb);
    for (Outcome i : kOutcomes)
      for (Outcome j : kOutcomes) {
        const Matrix kk = kron(ka[i], kb[j]);
        const Vector v = kk * joint.amp();
        const double pij = std::real(inner(v, v));
        t.within(std::abs(pij - born_prob(pa, ka[i]) * born_prob(pb, kb[j])), 1e-12,
                 [&] { return "g=" + format_double(g); });
      }
  }
}

void measurement_commuting(Tally& t, rnd::Engine& rng, const VerifyOptions& o) {
  for (std::size_t k = 0; k < o.trials; ++k) {
    const double g = rnd::uniform(rng, 0.0, 1.0);
    const KrausPair kp = kraus_pair(g, rnd::axis(rng));
    t.within(max_norm(commutator(kp.plus, kp.minus)), 1e-13, [&] { return "g=" + format_double(g); });
    t.expect(is_hermitian(kp.plus, 1e-15) && is_hermitian(kp.minus, 1e-15),
             [&] { return "hermiticity g=" + format_double(g); });
  }
}

void colinearity_lemma(Tally& t, rnd::Engine& rng, const VerifyOptions& o) {
  for (std::size_t k = 0; k < o.trials; ++k) {
    const double g = rnd::uniform(rng, 0.01, 1.0);
    const Axis n = rnd::axis(rng);
    const KrausPair kp = kraus_pair(g, n);
    // Generic input: never an eigenstate, never colinear.
    const Ket phi = rnd::ket(rng, Qubit::A);
    const bool col = colinear(kp.plus * phi.amp(), kp.minus * phi.amp());
    const bool eig = eigen_overlap(phi, n) >= 1.0 - 1e-12;
    t.expect(col == eig, [&] { return "random input g=" + format_double(g); });
    // Constructed eigenstate: always colinear.
    const auto es = herm_eig(projector(n, k % 2 ? Outcome::Plus : Outcome::Minus));
    const Ket e = Ket::from_amplitudes(Qubit::A, es.vectors(0, 0), es.vectors(1, 0));
    t.expect(colinear(kp.plus * e.amp(), kp.minus * e.amp()) && eigen_overlap(e, n) >= 1.0 - 1e-12,
             [&] { return "eigenstate input g=" + format_double(g); });
  }
}

// ---- dilation ----

void kraus_strength_relation(Tally& t, rnd::Engine& rng, const VerifyOptions& o) {
  for (std::size_t k = 0; k < o.trials; ++k) {
    const double tau = rnd::uniform(rng, 0.5, 2.0);
    const double jtau = rnd::uniform(rng, 0.0, M_PI / 4.0);
    const DilationParams p{jtau / tau, tau, rnd::axis(rng)};
    const auto ext = extract_kraus(unitary_sd(p));
    const KrausPair kp = kraus_pair(p.strength(), p.axis);
    const double err = std::max(max_abs_diff(fix_gauge(ext.plus), fix_gauge(kp.plus)),
                                max_abs_diff(fix_gauge(ext.minus), fix_gauge(kp.minus)));
    t.within(err, 1e-12, [&] { return "J*tau=" + format_double(jtau); });
  }
}

void commuting_sectors(Tally& t, rnd::Engine& rng, const VerifyOptions& o) {
  for (std::size_t k = 0; k < std::max<std::size_t>(1, o.trials / 10); ++k) {
    const double tau = rnd::uniform(rng, 0.5, 2.0);
    const double j = rnd::uniform(rng, 0.0, M_PI / 4.0) / tau;
    const BranchAxes b0{rnd::axis(rng), rnd::axis(rng)}, b1{rnd::axis(rng), rnd::axis(rng)};
    const Op h0 = control_sector_hamiltonian(0, b0, j, tau), h1 = control_sector_hamiltonian(1, b1, j, tau);
    t.within(max_norm(commutator(h0.matrix(), h1.matrix())), 1e-12, [&] { return "trial " + std::to_string(k); });
  }
}

void expm_consistency(Tally& t, rnd::Engine& rng, const VerifyOptions& o) {
  const cplx minus_i{0.0, -1.0};
  for (std::size_t k = 0; k < std::max<std::size_t>(1, o.trials / 5); ++k) {
    const double tau = rnd::uniform(rng, 0.5, 2.0);
    const double jtau = rnd::uniform(rng, 0.0, M_PI / 4.0);
    const DilationParams p{jtau / tau, tau, rnd::axis(rng)};
    const Matrix expm_sd = oracle::expm((minus_i * tau) * hamiltonian_sd(p).matrix());
    t.within(max_abs_diff(unitary_sd(p).matrix(), expm_sd), 1e-10, [&] { return "U_SD J*tau=" + format_double(jtau); });

    const BranchAxes b0{rnd::axis(rng), rnd::axis(rng)}, b1{rnd::axis(rng), rnd::axis(rng)};
    const Matrix expm_tot = oracle::expm((minus_i * tau) * total_hamiltonian(b0, b1, jtau / tau, tau).matrix());
    const Op u = total_unitary(b0, b1, jtau);
    t.within(max_abs_diff(u.matrix(), expm_tot), 1e-9, [&] { return "U_tot J*tau=" + format_double(jtau); });
    t.expect(is_unitary(u.matrix(), 1e-12), [&] { return "U_tot unitarity J*tau=" + format_double(jtau); });
  }
}

// ---- protocol ----

void probability_completeness(Tally& t, rnd::Engine& rng, const VerifyOptions& o) {
  const ConfigSampler general = general_sampler(), canonical = canonical_sampler();
  for (std::size_t k = 0; k < o.trials; ++k) {
    const ProtocolConfig cfg = (k % 2 ? general : canonical)(rng);
    const double w = total_weight(conditional_states_kraus(cfg)) +
                     total_weight(conditional_states_kraus(with_complementary_postselection(cfg)));
    t.within(std::abs(w - 1.0), 1e-12, [&] { return describe(cfg); });
  }
}

void kraus_dilation_equivalence(Tally& t, rnd::Engine& rng, const VerifyOptions& o) {
  const ConfigSampler general = general_sampler(), canonical = canonical_sampler();
  for (std::size_t k = 0; k < o.trials; ++k) {
    const ProtocolConfig cfg = (k % 2 ? general : canonical)(rng);
    const Sectors kr = conditional_states_kraus(cfg), dl = conditional_states_dilation(cfg);
    for (std::size_t s = 0; s < 4; ++s) {
      t.within(std::abs(kr[s].weight - dl[s].weight), 1e-12, [&] { return "weight " + describe(cfg); });
      if (kr[s].weight > tol::kDegenerateWeight)
        t.within(1.0 - phase_fidelity(kr[s].psi, dl[s].psi), 1e-10, [&] { return "fidelity " + describe(cfg); });
    }
  }
}

void schmidt_criterion(Tally& t, rnd::Engine& rng, const VerifyOptions& o) {
  const ConfigSampler general = general_sampler();
  for (std::size_t k = 0; k < o.trials; ++k) {
    const ProtocolConfig cfg = general(rng);
    const Sectors sectors = conditional_states_kraus(cfg);
    const KrausPair ka = kraus_pair(cfg.g, cfg.branches.zero.a), kb = kraus_pair(cfg.g, cfg.branches.zero.b);
    const KrausPair ma = kraus_pair(cfg.g, cfg.branches.one.a), mb = kraus_pair(cfg.g, cfg.branches.one.b);
    for (const auto& s : sectors) {
      if (s.weight <= 1e-10) continue;
      const bool a_free = !colinear(ka[s.i] * cfg.input_a.amp(), ma[s.i] * cfg.input_a.amp());
      const bool b_free = !colinear(kb[s.j] * cfg.input_b.amp(), mb[s.j] * cfg.input_b.amp());
      const double c = concurrence(density_of(s.psi.normalized()));
      t.expect((c > 1e-8) == (a_free && b_free), [&] {
        return "sector (" + std::string(symbol(s.i)) + symbol(s.j) + ") C=" + format_double(c) + " " + describe(cfg);
      });
    }
  }
}

void bell_sectors(Tally& t, rnd::Engine& rng, const VerifyOptions& o) {
  for (std::size_t k = 0; k < o.trials; ++k) {
    const double g = rnd::uniform(rng, 0.01, 1.0);
    const double theta = rnd::uniform(rng, 0.05, M_PI - 0.05);
    const Sectors sectors = conditional_states_kraus(ProtocolConfig::canonical(g, theta));
    for (std::size_t s : {std::size_t{0}, std::size_t{3}}) {
      if (sectors[s].weight <= tol::kDegenerateWeight) continue;  // (-,-) at g = 1
      const Op pure = density_of(sectors[s].psi.normalized());
      t.within(std::abs(concurrence(pure) - 1.0), 1e-10, [&] { return "concurrence " + at(g, theta); });
      t.within(1.0 - phase_fidelity(sectors[s].psi, phi_minus()), 1e-10, [&] { return "fidelity " + at(g, theta); });
    }
  }
}

void sector_closed_form(Tally& t, rnd::Engine&, const VerifyOptions&) {
  const GridAxis gs{0.0, 1.0, 50}, ts{0.0, 2.0 * M_PI, 50};
  for (std::size_t a = 0; a < gs.steps; ++a)
    for (std::size_t b = 0; b < ts.steps; ++b) {
      const double g = gs.at(a), theta = ts.at(b);
      const Sectors s = conditional_states_kraus(ProtocolConfig::canonical(g, theta));
      t.within(std::abs(s[0].weight - p_sector_closed(Outcome::Plus, g, theta)), 1e-12, [&] { return "P++ " + at(g, theta); });
      t.within(std::abs(s[3].weight - p_sector_closed(Outcome::Minus, g, theta)), 1e-12, [&] { return "P-- " + at(g, theta); });
      t.within(std::abs(s[0].weight + s[3].weight - p_bell(g, theta)), 1e-12, [&] { return "P_Bell " + at(g, theta); });
    }
}

// ---- analysis ----

void closed_form_concurrence(Tally& t, rnd::Engine&, const VerifyOptions& o) {
  const ClosedConcurrence closed = o.closed_concurrence ? o.closed_concurrence : ClosedConcurrence(concurrence_avg_closed);
  double grid_max = 0.0;
  for (const auto& r : evaluate_grid(standard_grid(), o.threads)) {
    const double c = closed(r.g, r.theta);
    grid_max = std::max(grid_max, c);
    t.expect(r.defined, [&] { return "undefined point " + at(r.g, r.theta); });
    if (r.c_numeric) t.within(std::abs(c - *r.c_numeric), 1e-9, [&] { return at(r.g, r.theta); });
  }
  t.within(std::max(grid_max - 0.5, 0.0), 1e-9, [&] { return "grid maximum " + format_double(grid_max); });
  const double edge = closed(1.0, 0.05);
  t.expect(edge >= 0.49, [&] { return "value at g=1 theta=0.05 is " + format_double(edge); });
}

void closed_form_gamma(Tally& t, rnd::Engine&, const VerifyOptions& o) {
  for (const auto& r : evaluate_grid(standard_grid(), o.threads))
    if (r.gamma_numeric) t.within(std::abs(r.gamma_closed - *r.gamma_numeric), 1e-9, [&] { return at(r.g, r.theta); });
}

void bell_basis_form(Tally& t, rnd::Engine&, const VerifyOptions&) {
  const SweepSpec spec = standard_grid();
  for (std::size_t a = 0; a < spec.g.steps; a += 7)
    for (std::size_t b = 0; b < spec.theta.steps; b += 7) {
      const double g = spec.g.at(a), theta = spec.theta.at(b);
      const Op rho = averaged_state(conditional_states_kraus(ProtocolConfig::canonical(g, theta)));
      const Matrix expected = bell_basis_matrix(bell_basis_components(g, theta));
      t.within(max_abs_diff(to_bell_basis(rho.matrix()), expected), 1e-12, [&] { return at(g, theta); });
      t.within(std::abs(trace(expected).real() - 1.0), 1e-12, [&] { return "trace " + at(g, theta); });
    }
}

void boundary_consistency(Tally& t, rnd::Engine&, const VerifyOptions&) {
  const GridAxis gs{0.02, 1.0, 50};
  for (std::size_t a = 0; a < gs.steps; ++a) {
    const double g = gs.at(a);
    const double tb = bell_boundary(g);
    t.within(std::abs(gamma_closed(g, tb) - 1.0), 1e-9, [&] { return "gamma at boundary g=" + format_double(g); });
    const double root = oracle::bisect([g](double th) { return gamma_closed(g, th) - 1.0; }, 0.0, M_PI / 2.0, 1e-14);
    t.within(std::abs(root - tb), 1e-10, [&] { return "bisection g=" + format_double(g); });
  }
}

void region_structure(Tally& t, rnd::Engine&, const VerifyOptions&) {
  const SweepSpec spec = standard_grid();
  for (std::size_t a = 0; a < spec.g.steps; ++a) {
    const double g = spec.g.at(a);
    const double tb = bell_boundary(g);
    for (std::size_t b = 0; b < spec.theta.steps; ++b) {
      const double theta = spec.theta.at(b);
      const bool violating = gamma_closed(g, theta) > 1.0 + tol::kBellMargin;
      t.expect(violating == (theta < tb), [&] { return at(g, theta) + " theta_B=" + format_double(tb); });
    }
  }
}

void nu3_branch_bound(Tally& t, rnd::Engine&, const VerifyOptions&) {
  const GridAxis gs{0.02, 1.0, 50}, ts{0.05, 2.0 * M_PI - 0.05, 100};
  for (std::size_t a = 0; a < gs.steps; ++a)
    for (std::size_t b = 0; b < ts.steps; ++b) {
      const double g = gs.at(a), theta = ts.at(b);
      const NuClosed nu = nu_closed(g, theta);
      if (nu.nu3 >= nu.nu2) t.within(std::max(nu.nu1 + nu.nu3 - 1.0, 0.0), 1e-12, [&] { return at(g, theta); });
    }
}

void lambda_ordering(Tally& t, rnd::Engine&, const VerifyOptions&) {
  const SweepSpec spec = standard_grid();
  for (std::size_t a = 0; a < spec.g.steps; a += 3)
    for (std::size_t b = 0; b < spec.theta.steps; b += 3) {
      const double g = spec.g.at(a), theta = spec.theta.at(b);
      const Op rho = averaged_state(conditional_states_kraus(ProtocolConfig::canonical(g, theta)));
      const auto lam = wootters_lambdas(rho);
      t.expect(lam[0] >= lam[1] && lam[1] >= lam[2] && lam[2] >= lam[3] && lam[3] >= -1e-12,
               [&] { return at(g, theta); });
      const auto closed = wootters_lambdas_closed(g, theta);
      // The closed forms do not fix which of l1, l2 is larger.
      const double hi = std::max(closed.l1, closed.l2), lo = std::min(closed.l1, closed.l2);
      t.within(std::max({std::abs(lam[0] - hi), std::abs(lam[1] - lo), lam[2], lam[3]}), 1e-9,
               [&] { return "closed lambdas " + at(g, theta); });
    }
}

void concurrence_bound(Tally& t, rnd::Engine&, const VerifyOptions& o) {
  double worst = 0.0;
  for (const auto& r : evaluate_grid(standard_grid(), o.threads)) {
    worst = std::max(worst, r.c_closed);
    if (r.c_numeric) worst = std::max(worst, *r.c_numeric);
  }
  t.within(std::max(worst - 0.5, 0.0), 1e-9, [&] { return "grid maximum " + format_double(worst); });
  t.expect(concurrence_avg_closed(1.0, 0.05) >= 0.49, [] { return std::string("limit approach at g=1 theta=0.05"); });
}

void gisin_bell_sectors(Tally& t, rnd::Engine& rng, const VerifyOptions& o) {
  for (std::size_t k = 0; k < o.trials; ++k) {
    const double g = rnd::uniform(rng, 0.01, 1.0);
    const double theta = rnd::uniform(rng, 0.05, M_PI - 0.05);
    const Sectors sectors = conditional_states_kraus(ProtocolConfig::canonical(g, theta));
    const HorodeckiReport h = horodecki(density_of(sectors[0].psi.normalized()));
    t.within(std::abs(h.gamma - 2.0), 1e-9, [&] { return at(g, theta); });
  }
}

void purity_probe(Tally& t, rnd::Engine& rng, const VerifyOptions& o) {
  const std::uint64_t base = rng();
  auto check = [&](const ProbeReport& rep, const char* family) {
    t.expect(rep.ok(), [&] {
      const auto& v = rep.violations.front();
      return std::string(family) + ": " + v.reason + " (purity=" + format_double(v.purity) +
             " C=" + format_double(v.concurrence) + ") " + v.config;
    });
  };
  check(purity_product_probe(canonical_sampler(), o.trials, base + 1, 0.5), "canonical");
  // Pure averages are rare enough that small trial counts may miss them all.
  const ProbeReport general = purity_product_probe(general_sampler(), std::max<std::size_t>(o.trials, 200), base + 2);
  check(general, "general");
  t.expect(general.pure_samples > 0, [] { return std::string("general: no pure averaged states sampled"); });

  rnd::Engine eig_rng(base + 3);
  const ConfigSampler eig = eigenstate_b_sampler();
  for (std::size_t k = 0; k < o.trials; ++k) {
    const ProtocolConfig cfg = eig(eig_rng);
    const Sectors s = conditional_states_kraus(cfg);
    if (total_weight(s) <= tol::kDegenerateWeight) continue;
    t.within(concurrence(averaged_state(s)), 1e-10, [&] { return "eigenstate input " + describe(cfg); });
  }
}

struct SuiteEntry {
  const char* name;
  Suite run;
};

const std::vector<SuiteEntry>& suites() {
  static const std::vector<SuiteEntry> all{
      {"qcore.tensor_associativity", tensor_associativity},
      {"qcore.partial_trace_product", partial_trace_product},
      {"qcore.herm_eig_reconstruction", herm_eig_reconstruction},
      {"qcore.psd_sqrt_projector", psd_sqrt_projector},
      {"measurement.completeness", measurement_completeness},
      {"measurement.factorization", measurement_factorization},
      {"measurement.commuting_pair", measurement_commuting},
      {"measurement.colinearity_lemma", colinearity_lemma},
      {"dilation.kraus_strength_relation", kraus_strength_relation},
      {"dilation.commuting_sectors", commuting_sectors},
      {"dilation.expm_consistency", expm_consistency},
      {"protocol.probability_completeness", probability_completeness},
      {"protocol.kraus_dilation_equivalence", kraus_dilation_equivalence},
      {"protocol.schmidt_criterion", schmidt_criterion},
      {"protocol.bell_sectors", bell_sectors},
      {"protocol.sector_closed_form", sector_closed_form},
      {"analysis.closed_form_concurrence", closed_form_concurrence},
      {"analysis.closed_form_gamma", closed_form_gamma},
      {"analysis.bell_basis_form", bell_basis_form},
      {"analysis.boundary_consistency", boundary_consistency},
      {"analysis.region_structure", region_structure},
      {"analysis.nu3_branch_bound", nu3_branch_bound},
      {"analysis.lambda_ordering", lambda_ordering},
      {"analysis.concurrence_bound", concurrence_bound},
      {"analysis.gisin_bell_sectors", gisin_bell_sectors},
      {"analysis.purity_product_probe", purity_probe},
  };
  return all;
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& s : suites()) out.emplace_back(s.name);
  return out;
}

VerifyReport run_verification(const VerifyOptions& options) {
  if (options.trials < 1) throw Error("verify: trials must be at least 1");
  VerifyReport report;
  std::uint64_t index = 0;
  for (const auto& entry : suites()) {
    SuiteResult result;
    result.name = entry.name;
    // Each suite gets its own stream so suites stay reproducible in isolation.
    rnd::Engine rng(options.seed * 0x9E3779B97F4A7C15ULL + ++index);
    try {
      Tally tally(result);
      entry.run(tally, rng, options);
    } catch (const std::exception& e) {
      result.passed = false;
      result.detail = std::string("exception: ") + e.what();
    }
    report.suites.push_back(std::move(result));
  }
  return report;
}

void print_report(std::ostream& os, const VerifyReport& report, bool quiet) {
  std::size_t failed = 0;
  for (const auto& s : report.suites) {
    if (!s.passed) ++failed;
    if (quiet && s.passed) continue;
    os << (s.passed ? "[PASS] " : "[FAIL] ") << s.name << " checks=" << s.checks;
    if (!s.passed) os << " :: " << s.detail;
    os << '\n';
  }
  os << (failed ? "FAILED " : "OK ") << report.suites.size() - failed << "/" << report.suites.size()
     << " suites passed\n";
}

double concurrence_avg_closed_sign_flipped(double g, double theta) {
  const double c = std::cos(theta);
  const double g2 = g * g;
  return g2 * (1.0 - c) / (4.0 * (1.0 + std::sqrt(1.0 - g2)) - g2 * (1.0 - c));
}

}  // namespace histkit
