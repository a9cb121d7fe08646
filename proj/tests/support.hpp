#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "histkit/measurement.hpp"
#include "histkit/qcore.hpp"

namespace testkit {

using histkit::cplx;
using histkit::Matrix;

// Small xorshift generator kept separate from the library's random module so
// property tests do not share sampling code with the code under test.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : s_(seed * 0x2545F4914F6CDD1DULL + 0x9E3779B97F4A7C15ULL) {}

  std::uint64_t next() {
    s_ ^= s_ >> 12;
    s_ ^= s_ << 25;
    s_ ^= s_ >> 27;
    return s_ * 0x2545F4914F6CDD1DULL;
  }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  double normal() {
    const double u = 1.0 - unit(), v = unit();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * v);
  }
  cplx complex_normal() { return {normal(), normal()}; }

  histkit::Axis axis() {
    const double z = uniform(-1.0, 1.0), phi = uniform(0.0, 2.0 * M_PI), r = std::sqrt(1.0 - z * z);
    return histkit::Axis::normalized(r * std::cos(phi), r * std::sin(phi), z);
  }

  histkit::Ket ket(histkit::Qubit q) {
    const cplx a = complex_normal(), b = complex_normal();
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    return histkit::Ket::from_amplitudes(q, a / n, b / n);
  }

  // Full-rank density matrix G G^dag / tr over n levels.
  Matrix density(std::size_t n) {
    Matrix g(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) g(r, c) = complex_normal();
    Matrix rho = g * g.adjoint();
    rho *= 1.0 / std::real(histkit::trace(rho));
    return rho;
  }

 private:
  std::uint64_t s_;
};

// Kronecker product written as an explicit four-index loop.
inline Matrix kron_oracle(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

// Pure two-qubit concurrence 2|ad - bc|.
inline double pure_concurrence(const std::vector<cplx>& psi) {
  double n = 0.0;
  for (const auto& v : psi) n += std::norm(v);
  return 2.0 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]) / n;
}

inline double fidelity(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  cplx ov = 0.0;
  double na = 0.0, nb = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    ov += std::conj(a[k]) * b[k];
    na += std::norm(a[k]);
    nb += std::norm(b[k]);
  }
  return std::norm(ov) / (na * nb);
}

}  // namespace testkit
