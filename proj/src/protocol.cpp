#include "histkit/protocol.hpp"

#include <cmath>

#include "histkit/tolerances.hpp"

namespace histkit {

namespace {

void require_single(const Ket& k, Qubit q, const char* what) {
  if (k.labels() != Labels{q}) throw Error(std::string("protocol: ") + what + " must be a single-qubit ket on " + std::string(name(q)));
  if (std::abs(k.norm() - 1.0) > tol::kUnitNorm) throw Error(std::string("protocol: ") + what + " is not normalized");
}

SectorResult make_sector(Outcome i, Outcome j, Vector amp) {
  Ket psi({Qubit::A, Qubit::B}, std::move(amp));
  const double w = std::real(inner(psi.amp(), psi.amp()));
  return SectorResult{i, j, std::move(psi), w};
}

}  // namespace

Branches canonical_branches(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  const Axis n0 = Axis::normalized(c, 0.0, -s);
  const Axis n1 = Axis::normalized(c, 0.0, s);
  return Branches{BranchAxes{Axis::x(), n0}, BranchAxes{n1, Axis::x()}};
}

ProtocolConfig ProtocolConfig::canonical(double g, double theta) {
  ProtocolConfig cfg;
  cfg.g = g;
  cfg.branches = canonical_branches(theta);
  return cfg;
}

void ProtocolConfig::validate() const {
  if (!(g >= 0.0 && g <= 1.0)) throw Error("protocol: g must lie in [0, 1]");
  if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > tol::kUnitNorm)
    throw Error("protocol: branch amplitudes are not normalized");
  require_single(control_post, Qubit::C, "control postselection");
  require_single(input_a, Qubit::A, "input_a");
  require_single(input_b, Qubit::B, "input_b");
}

ProtocolConfig with_complementary_postselection(const ProtocolConfig& cfg) {
  ProtocolConfig out = cfg;
  const auto& c = cfg.control_post.amp();
  out.control_post = Ket::from_amplitudes(Qubit::C, -std::conj(c[1]), std::conj(c[0]));
  return out;
}

Sectors conditional_states_kraus(const ProtocolConfig& cfg) {
  cfg.validate();
  const cplx alpha_eff = cfg.alpha * std::conj(cfg.control_post.amp()[0]);
  const cplx beta_eff = cfg.beta * std::conj(cfg.control_post.amp()[1]);

  const KrausPair ka = kraus_pair(cfg.g, cfg.branches.zero.a);
  const KrausPair kb = kraus_pair(cfg.g, cfg.branches.zero.b);
  const KrausPair ma = kraus_pair(cfg.g, cfg.branches.one.a);
  const KrausPair mb = kraus_pair(cfg.g, cfg.branches.one.b);

  Sectors out{};
  for (std::size_t s = 0; s < kSectorOrder.size(); ++s) {
    const auto [i, j] = kSectorOrder[s];
    const Vector ka_phi = ka[i] * cfg.input_a.amp();
    const Vector kb_phi = kb[j] * cfg.input_b.amp();
    const Vector ma_phi = ma[i] * cfg.input_a.amp();
    const Vector mb_phi = mb[j] * cfg.input_b.amp();
    Vector amp(4);
    for (std::size_t x = 0; x < 2; ++x)
      for (std::size_t y = 0; y < 2; ++y)
        amp[2 * x + y] = alpha_eff * ka_phi[x] * kb_phi[y] + beta_eff * ma_phi[x] * mb_phi[y];
    out[s] = make_sector(i, j, std::move(amp));
  }
  return out;
}

Sectors conditional_states_dilation(const ProtocolConfig& cfg) {
  cfg.validate();
  const double jtau = std::acos(cfg.g) / 2.0;
  const Op u = total_unitary(cfg.branches.zero, cfg.branches.one, jtau);

  const Ket control = Ket::from_amplitudes(Qubit::C, cfg.alpha, cfg.beta);
  const Ket detectors = tensor(Ket::basis(Qubit::DA, 0), Ket::basis(Qubit::DB, 0));
  const Ket in = tensor(tensor(control, tensor(cfg.input_a, cfg.input_b)), detectors);
  const Vector out_state = u.matrix() * in.amp();

  // Index over (C, A, B, D_A, D_B), big-endian.
  const auto& post = cfg.control_post.amp();
  Sectors out{};
  for (std::size_t s = 0; s < kSectorOrder.size(); ++s) {
    const auto [i, j] = kSectorOrder[s];
    const std::size_t di = static_cast<std::size_t>(detector_bit(i));
    const std::size_t dj = static_cast<std::size_t>(detector_bit(j));
    Vector amp(4);
    for (std::size_t ab = 0; ab < 4; ++ab) {
      cplx v{};
      for (std::size_t c = 0; c < 2; ++c) v += std::conj(post[c]) * out_state[(c << 4) | (ab << 2) | (di << 1) | dj];
      amp[ab] = v;
    }
    out[s] = make_sector(i, j, std::move(amp));
  }
  return out;
}

double total_weight(const Sectors& sectors) {
  double w = 0.0;
  for (const auto& s : sectors) w += s.weight;
  return w;
}

double p_sector_closed(Outcome j, double g, double theta) {
  const double s = std::sin(theta);
  return (1.0 + sign(j) * g) * (1.0 - std::sqrt(1.0 - g * g)) * s * s / 16.0;
}

double p_bell(double g, double theta) {
  const double s = std::sin(theta);
  return (1.0 - std::sqrt(1.0 - g * g)) * s * s / 8.0;
}

Op averaged_state(const Sectors& sectors) {
  const double w = total_weight(sectors);
  if (!(w > tol::kDegenerateWeight)) throw DegeneratePostselection();
  Matrix rho(4, 4);
  for (const auto& s : sectors) rho += outer(s.psi.amp(), s.psi.amp());
  rho *= 1.0 / w;
  return Op({Qubit::A, Qubit::B}, std::move(rho));
}

}  // namespace histkit
