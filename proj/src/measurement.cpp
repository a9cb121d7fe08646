#include "histkit/measurement.hpp"

#include <algorithm>
#include <cmath>

#include "histkit/tolerances.hpp"

namespace histkit {

Axis Axis::from(double x, double y, double z) {
  const double n = std::sqrt(x * x + y * y + z * z);
  if (!(std::abs(n - 1.0) <= tol::kUnitNorm)) throw Error("measurement axis is not a unit vector");
  return Axis({x, y, z});
}

Axis Axis::normalized(double x, double y, double z) {
  const double n = std::sqrt(x * x + y * y + z * z);
  if (!(n > 0.0)) throw Error("measurement axis has zero length");
  return Axis({x / n, y / n, z / n});
}

Matrix pauli_along(const Axis& axis) {
  const auto& n = axis.n();
  return cplx{n[0]} * pauli::x() + cplx{n[1]} * pauli::y() + cplx{n[2]} * pauli::z();
}

Matrix projector(const Axis& axis, Outcome s) {
  return 0.5 * (pauli::i2() + cplx{static_cast<double>(sign(s))} * pauli_along(axis));
}

KrausPair kraus_pair(double g, const Axis& axis) {
  if (!(g >= 0.0 && g <= 1.0)) throw Error("measurement strength g must lie in [0, 1]");
  const double a = std::sqrt((1.0 + g) / 2.0);
  const double b = std::sqrt((1.0 - g) / 2.0);
  const Matrix pp = projector(axis, Outcome::Plus);
  const Matrix pm = projector(axis, Outcome::Minus);
  return KrausPair{g, axis, a * pp + b * pm, a * pm + b * pp};
}

double born_prob(const Ket& phi, const Matrix& k) {
  if (phi.dim() != 2 || k.rows() != 2 || k.cols() != 2) throw Error("born_prob: single-qubit input required");
  if (std::abs(phi.norm() - 1.0) > tol::kUnitNorm) throw Error("born_prob: input state is not normalized");
  const Vector kp = k * phi.amp();
  return std::clamp(std::real(inner(kp, kp)), 0.0, 1.0);
}

double colinearity(std::span<const cplx> u, std::span<const cplx> v) {
  if (u.size() != 2 || v.size() != 2) throw Error("colinearity: two-component vectors required");
  const double nu = norm(u), nv = norm(v);
  if (nu == 0.0 || nv == 0.0) return 0.0;
  return std::abs(u[0] * v[1] - u[1] * v[0]) / (nu * nv);
}

bool colinear(std::span<const cplx> u, std::span<const cplx> v) { return colinearity(u, v) < tol::kColinear; }

double eigen_overlap(const Ket& phi, const Axis& axis) {
  const Ket unit = phi.normalized();
  double best = 0.0;
  for (Outcome s : kOutcomes) {
    const Vector pv = projector(axis, s) * unit.amp();
    best = std::max(best, std::real(inner(unit.amp(), pv)));
  }
  return best;
}

}  // namespace histkit
