#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "histkit/protocol.hpp"
#include "histkit/qcore.hpp"

namespace histkit {

// ---- Wootters concurrence ----

// Square roots of the eigenvalues of rho * rho_tilde, descending, with
// rho_tilde = (sigma_y ⊗ sigma_y) rho^* (sigma_y ⊗ sigma_y).
std::array<double, 4> wootters_lambdas(const Op& rho);

// max(0, l1 - l2 - l3 - l4) for a normalized two-qubit density matrix.
double concurrence(const Op& rho);

double purity(const Op& rho);

// Readout-averaged concurrence of the canonical protocol:
//   g^2 (1 + cos t) / (4 (1 + sqrt(1 - g^2)) - g^2 (1 - cos t)).
double concurrence_avg_closed(double g, double theta);

// ---- Bell-basis form of the averaged canonical state ----

struct BellComponents {
  double x, y, z, w;
  double norm;  // trace of the unnormalized average
};

BellComponents bell_basis_components(double g, double theta);

// Density matrix in the ordered basis (Phi+, Phi-, Psi+, Psi-).
Matrix bell_basis_matrix(const BellComponents& c);

// Rotate a two-qubit operator from the computational into the Bell basis.
Matrix to_bell_basis(const Matrix& m);

struct WoottersClosed {
  double l1, l2;  // l3 = l4 = 0
};

WoottersClosed wootters_lambdas_closed(double g, double theta);

// ---- CHSH / Horodecki ----

struct HorodeckiReport {
  std::array<std::array<double, 3>, 3> correlations;  // V, row = A Pauli, col = B Pauli, order (x, y, z)
  std::array<double, 3> nu;                           // eig(V^T V), descending
  double gamma;                                       // nu[0] + nu[1]
  double b_max;                                       // 2 sqrt(gamma)
  bool violating;                                     // gamma > 1 (+ margin)
};

HorodeckiReport horodecki(const Op& rho);

struct NuClosed {
  double nu1, nu2, nu3;
};

// Eigenvalues of V^T V for the averaged canonical state, unsorted.
NuClosed nu_closed(double g, double theta);

// nu1 + max(nu2, nu3).
double gamma_closed(double g, double theta);

// cos(theta) where nu2 = nu3: (3 s - 1) / (3 - s), s = sqrt(1 - g^2).
double crossover_cos(double g);

// theta_B(g) in (0, pi): gamma_closed(g, theta_B) = 1, violation for theta < theta_B.
double bell_boundary(double g);

// ---- Purity versus product structure of averaged states ----

using ConfigSampler = std::function<ProtocolConfig(std::mt19937_64&)>;

// Canonical family with g ~ U[0, 1], theta ~ U(0, 2 pi).
ConfigSampler canonical_sampler();
// Random axes, inputs, strengths, branch amplitudes and postselection;
// a fraction of draws use g = 0 or eigenstate inputs.
ConfigSampler general_sampler();
// Input on B is an eigenstate of both branch axes acting on B.
ConfigSampler eigenstate_b_sampler();

struct ProbeViolation {
  std::size_t trial;
  std::string config;
  double purity;
  double concurrence;
  std::string reason;
};

struct ProbeReport {
  std::size_t trials = 0;
  std::size_t evaluated = 0;
  std::size_t degenerate = 0;
  std::size_t pure_samples = 0;
  double max_concurrence = 0.0;
  std::vector<ProbeViolation> violations;

  bool ok() const { return violations.empty(); }
};

// For each sampled config: purity > 1 - 1e-10 must imply concurrence < 1e-8,
// and, if a bound is given, concurrence <= bound + 1e-9.
ProbeReport purity_product_probe(const ConfigSampler& sampler, std::size_t trials, std::uint64_t seed,
                                 std::optional<double> concurrence_bound = std::nullopt);

std::string describe(const ProtocolConfig& cfg);

}  // namespace histkit
