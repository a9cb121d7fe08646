#include "histkit/random.hpp"

#include <cmath>

namespace histkit::rnd {

double uniform(Engine& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

Axis axis(Engine& rng) {
  std::normal_distribution<double> n;
  for (;;) {
    const double x = n(rng), y = n(rng), z = n(rng);
    if (x * x + y * y + z * z > 1e-6) return Axis::normalized(x, y, z);
  }
}

Ket ket(Engine& rng, Qubit q) {
  std::normal_distribution<double> n;
  const cplx a{n(rng), n(rng)}, b{n(rng), n(rng)};
  return Ket::from_amplitudes(q, a, b).normalized();
}

cplx phase(Engine& rng) { return std::polar(1.0, uniform(rng, 0.0, 2.0 * M_PI)); }

Matrix hermitian(Engine& rng, std::size_t n) {
  std::normal_distribution<double> d;
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = d(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = cplx{d(rng), d(rng)};
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

Op density(Engine& rng, const Labels& labels) {
  const std::size_t n = std::size_t{1} << labels.size();
  std::normal_distribution<double> d;
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = cplx{d(rng), d(rng)};
  Matrix rho = g * g.adjoint();
  rho *= 1.0 / trace(rho).real();
  return Op(labels, std::move(rho));
}

}  // namespace histkit::rnd
