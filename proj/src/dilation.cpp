#include "histkit/dilation.hpp"

#include <cmath>

#include "histkit/tolerances.hpp"

namespace histkit {

namespace {

const Labels kGlobal{Qubit::C, Qubit::A, Qubit::B, Qubit::DA, Qubit::DB};

// exp(-i phi sigma_y)
Matrix y_rotation(double phi) {
  const double c = std::cos(phi), s = std::sin(phi);
  return {{c, -s}, {s, c}};
}

Op control_projector(int bit) {
  Matrix m(2, 2);
  m(bit, bit) = 1.0;
  return Op({Qubit::C}, std::move(m));
}

Op branch_term(int bit, const BranchAxes& axes, double jtau) {
  const Op ua = unitary_sd(DilationParams{jtau, 1.0, axes.a}, Qubit::A);
  const Op ub = unitary_sd(DilationParams{jtau, 1.0, axes.b}, Qubit::B);
  return reorder(tensor(control_projector(bit), tensor(ua, ub)), kGlobal);
}

}  // namespace

double DilationParams::strength() const { return std::cos(2.0 * jtau()); }

void DilationParams::validate() const {
  if (!(tau > 0.0)) throw Error("dilation: interaction time must be positive");
  const double jt = jtau();
  if (!(jt >= -1e-15 && jt <= M_PI / 4.0 + 1e-15)) throw Error("dilation: J*tau must lie in [0, pi/4]");
}

DilationParams DilationParams::from_strength(double g, const Axis& axis, double tau) {
  if (!(g >= 0.0 && g <= 1.0)) throw Error("measurement strength g must lie in [0, 1]");
  if (!(tau > 0.0)) throw Error("dilation: interaction time must be positive");
  return DilationParams{std::acos(g) / (2.0 * tau), tau, axis};
}

Qubit detector_for(Qubit system) {
  switch (system) {
    case Qubit::A: return Qubit::DA;
    case Qubit::B: return Qubit::DB;
    default: throw Error("dilation: only A and B carry detectors");
  }
}

Op hamiltonian_sd(const DilationParams& p, Qubit system) {
  p.validate();
  const Matrix sy = pauli::y();
  Matrix h = p.coupling * kron(projector(p.axis, Outcome::Plus), sy);
  h += (M_PI / (2.0 * p.tau) - p.coupling) * kron(projector(p.axis, Outcome::Minus), sy);
  return Op({system, detector_for(system)}, std::move(h));
}

Op unitary_sd(const DilationParams& p, Qubit system) {
  p.validate();
  const double jt = p.jtau();
  Matrix u = kron(projector(p.axis, Outcome::Plus), y_rotation(jt));
  u += kron(projector(p.axis, Outcome::Minus), y_rotation(M_PI / 2.0 - jt));
  return Op({system, detector_for(system)}, std::move(u));
}

KrausExtraction extract_kraus(const Op& u) {
  if (u.labels().size() != 2) throw Error("extract_kraus: expected a system-detector operator");
  const Matrix& m = u.matrix();
  if (!is_unitary(m, tol::kUnitaryInput)) throw Error("extract_kraus: operator is not unitary");
  KrausExtraction k{Matrix(2, 2), Matrix(2, 2)};
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) {
      k.plus(r, c) = m(2 * r + 0, 2 * c + 0);
      k.minus(r, c) = m(2 * r + 1, 2 * c + 0);
    }
  return k;
}

Op control_sector_hamiltonian(int bit, const BranchAxes& branch, double coupling, double tau) {
  if (bit != 0 && bit != 1) throw Error("dilation: control bit must be 0 or 1");
  const Labels local{Qubit::A, Qubit::DA, Qubit::B, Qubit::DB};
  const Op ha = hamiltonian_sd(DilationParams{coupling, tau, branch.a}, Qubit::A);
  const Op hb = hamiltonian_sd(DilationParams{coupling, tau, branch.b}, Qubit::B);
  const Op sum(local, embed(ha, local).matrix() + embed(hb, local).matrix());
  return reorder(tensor(control_projector(bit), sum), kGlobal);
}

Op total_hamiltonian(const BranchAxes& branch0, const BranchAxes& branch1, double coupling, double tau) {
  return Op(kGlobal, control_sector_hamiltonian(0, branch0, coupling, tau).matrix() +
                         control_sector_hamiltonian(1, branch1, coupling, tau).matrix());
}

Op total_unitary(const BranchAxes& branch0, const BranchAxes& branch1, double jtau) {
  return total_unitary(branch0, branch1, jtau, jtau);
}

Op total_unitary(const BranchAxes& branch0, const BranchAxes& branch1, double jtau0, double jtau1) {
  return Op(kGlobal, branch_term(0, branch0, jtau0).matrix() + branch_term(1, branch1, jtau1).matrix());
}

}  // namespace histkit
