#pragma once

#include "histkit/measurement.hpp"
#include "histkit/qcore.hpp"

namespace histkit {

// System-detector coupling for one measured qubit. The detector starts in
// |0> and couples through sigma_y:
//   H = J Pi_+ ⊗ sigma_y + (pi/(2 tau) - J) Pi_- ⊗ sigma_y.
// The realized measurement strength is g = cos(2 J tau).
struct DilationParams {
  double coupling;  // J, in units of 1/tau
  double tau;
  Axis axis;

  double jtau() const { return coupling * tau; }
  double strength() const;

  // Throws unless tau > 0 and J tau lies in [0, pi/4].
  void validate() const;

  static DilationParams from_strength(double g, const Axis& axis, double tau = 1.0);
};

Qubit detector_for(Qubit system);

// Operators below act on the labels (system, detector_for(system)).
Op hamiltonian_sd(const DilationParams& p, Qubit system = Qubit::A);
Op unitary_sd(const DilationParams& p, Qubit system = Qubit::A);

struct KrausExtraction {
  Matrix plus;   // <0|U|0>_D
  Matrix minus;  // <1|U|0>_D
};

// u must be a unitary on (system, detector).
KrausExtraction extract_kraus(const Op& u);

// Measurement axes used on A and B within one control branch.
struct BranchAxes {
  Axis a;
  Axis b;
};

// |bit><bit|_C ⊗ (H^A + H^B) over (C, A, B, D_A, D_B) for one branch.
Op control_sector_hamiltonian(int bit, const BranchAxes& branch, double coupling, double tau);

// Full five-qubit generator over (C, A, B, D_A, D_B) with coupling J and
// interaction time tau shared by all four couplings.
Op total_hamiltonian(const BranchAxes& branch0, const BranchAxes& branch1, double coupling, double tau);

// Controlled evolution |0><0|_C ⊗ U^A ⊗ U^B + |1><1|_C ⊗ U^A' ⊗ U^B' over
// (C, A, B, D_A, D_B).
Op total_unitary(const BranchAxes& branch0, const BranchAxes& branch1, double jtau);
Op total_unitary(const BranchAxes& branch0, const BranchAxes& branch1, double jtau0, double jtau1);

}  // namespace histkit
