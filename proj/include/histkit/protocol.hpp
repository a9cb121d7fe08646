#pragma once

#include <array>

#include "histkit/dilation.hpp"
#include "histkit/measurement.hpp"
#include "histkit/qcore.hpp"

namespace histkit {

struct Branches {
  BranchAxes zero;  // selected by |0>_C
  BranchAxes one;   // selected by |1>_C
};

// Branch 0 measures x on A and n0 on B, branch 1 measures n1 on A and x on B,
// with n0 = cos(theta) x - sin(theta) z and n1 = cos(theta) x + sin(theta) z.
Branches canonical_branches(double theta);

// One run of the coherently controlled protocol. The control is prepared in
// alpha|0> + beta|1> and postselected on control_post.
struct ProtocolConfig {
  double g = 0.0;
  Branches branches = canonical_branches(0.0);
  cplx alpha = M_SQRT1_2;
  cplx beta = M_SQRT1_2;
  Ket control_post = Ket::minus(Qubit::C);
  Ket input_a = Ket::plus(Qubit::A);
  Ket input_b = Ket::plus(Qubit::B);

  // |+>_C preparation, |->_C postselection, |++> input, canonical axes.
  static ProtocolConfig canonical(double g, double theta);

  void validate() const;
};

// Same experiment, postselected on the state orthogonal to control_post.
ProtocolConfig with_complementary_postselection(const ProtocolConfig& cfg);

struct SectorResult {
  Outcome i;  // readout on A
  Outcome j;  // readout on B
  Ket psi;    // unnormalized, labels (A, B)
  double weight;
};

// Always ordered (+,+), (+,-), (-,+), (-,-).
using Sectors = std::array<SectorResult, 4>;

inline constexpr std::array<std::array<Outcome, 2>, 4> kSectorOrder{{{Outcome::Plus, Outcome::Plus},
                                                                     {Outcome::Plus, Outcome::Minus},
                                                                     {Outcome::Minus, Outcome::Plus},
                                                                     {Outcome::Minus, Outcome::Minus}}};

// psi_ij = alpha' (K_i ⊗ K_j)|phi_A phi_B> + beta' (M_i ⊗ M_j)|phi_A phi_B>.
Sectors conditional_states_kraus(const ProtocolConfig& cfg);

// Runs the five-qubit controlled unitary and projects control and detectors.
Sectors conditional_states_dilation(const ProtocolConfig& cfg);

double total_weight(const Sectors& sectors);

// (1 + j g)(1 - sqrt(1 - g^2)) sin^2(theta) / 16 for sector (j, j).
double p_sector_closed(Outcome j, double g, double theta);
// P_++ + P_-- = (1 - sqrt(1 - g^2)) sin^2(theta) / 8.
double p_bell(double g, double theta);

class DegeneratePostselection : public Error {
 public:
  DegeneratePostselection() : Error("postselection probability vanishes") {}
};

// Normalized readout average sum |psi_ij><psi_ij| / sum P_ij over (A, B).
Op averaged_state(const Sectors& sectors);

}  // namespace histkit
