#pragma once

#include <array>
#include <span>

#include "histkit/qcore.hpp"

namespace histkit {

// Unit 3-vector n defining the observable sigma_n = n . sigma.
class Axis {
 public:
  // Throws unless |n| = 1 within tol::kUnitNorm.
  static Axis from(double x, double y, double z);
  // Normalizes a nonzero vector.
  static Axis normalized(double x, double y, double z);
  static Axis x() { return from(1.0, 0.0, 0.0); }
  static Axis y() { return from(0.0, 1.0, 0.0); }
  static Axis z() { return from(0.0, 0.0, 1.0); }

  const std::array<double, 3>& n() const { return n_; }
  Axis operator-() const { return Axis({-n_[0], -n_[1], -n_[2]}); }

 private:
  explicit Axis(std::array<double, 3> n) : n_(n) {}
  std::array<double, 3> n_;
};

// Readout sign. Plus corresponds to detector outcome 0, Minus to 1.
enum class Outcome : int { Plus = +1, Minus = -1 };

inline constexpr std::array<Outcome, 2> kOutcomes{Outcome::Plus, Outcome::Minus};

constexpr int sign(Outcome o) { return static_cast<int>(o); }
constexpr int detector_bit(Outcome o) { return o == Outcome::Plus ? 0 : 1; }
constexpr Outcome flip(Outcome o) { return o == Outcome::Plus ? Outcome::Minus : Outcome::Plus; }
inline const char* symbol(Outcome o) { return o == Outcome::Plus ? "+" : "-"; }

Matrix pauli_along(const Axis& axis);

// Projector onto the sigma_n eigenstate with eigenvalue sign(s).
Matrix projector(const Axis& axis, Outcome s);

// Two-outcome measurement of strength g along an axis:
//   L_s = a Pi_s + b Pi_{-s},  a = sqrt((1+g)/2),  b = sqrt((1-g)/2).
struct KrausPair {
  double g;
  Axis axis;
  Matrix plus;
  Matrix minus;

  const Matrix& operator[](Outcome s) const { return s == Outcome::Plus ? plus : minus; }
};

KrausPair kraus_pair(double g, const Axis& axis);

// <phi| K^dagger K |phi> for a normalized single-qubit ket.
double born_prob(const Ket& phi, const Matrix& k);

// |u0 v1 - u1 v0| / (|u| |v|) for two-component vectors; 0 if either is zero.
double colinearity(std::span<const cplx> u, std::span<const cplx> v);
bool colinear(std::span<const cplx> u, std::span<const cplx> v);

// Largest overlap <phi|Pi_s|phi> over s; 1 for eigenstates of sigma_n.
double eigen_overlap(const Ket& phi, const Axis& axis);

}  // namespace histkit
