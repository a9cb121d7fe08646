#pragma once

// Numerical tolerances shared by the library, the verification suites and
// the tests. All comparisons are max-norm unless stated otherwise.

namespace histkit::tol {

// Hermiticity of a density matrix: ||M - M^dagger||_max.
inline constexpr double kDensityHermitian = 1e-12;
// Smallest eigenvalue accepted for a density matrix.
inline constexpr double kDensityPsd = -1e-10;
// Trace of a density matrix against its stored weight.
inline constexpr double kDensityTrace = 1e-12;

// Hermiticity precondition of the eigensolver.
inline constexpr double kEigHermitian = 1e-10;
// Jacobi stops once the off-diagonal Frobenius norm falls below this
// fraction of the full Frobenius norm.
inline constexpr double kJacobiOffDiagonal = 1e-14;
inline constexpr int kJacobiMaxSweeps = 100;

// psd_sqrt: eigenvalues below kPsdReject are an error, eigenvalues in
// [kPsdReject, noise floor] are set to zero. The noise floor is relative to
// the largest eigenvalue.
inline constexpr double kPsdReject = -1e-8;
inline constexpr double kPsdNoiseFloor = 1.5e-14;

// Unit-vector and normalization checks.
inline constexpr double kUnitNorm = 1e-12;
// Completeness and unitarity checks on constructed operators.
inline constexpr double kCompleteness = 1e-12;
// Unitarity check applied to inputs of extract_kraus.
inline constexpr double kUnitaryInput = 1e-10;

// Scale-invariant colinearity statistic threshold.
inline constexpr double kColinear = 1e-9;

// Total postselection weight below which the averaged state is undefined.
inline constexpr double kDegenerateWeight = 1e-14;

// CHSH violation is reported for gamma > 1 + kBellMargin.
inline constexpr double kBellMargin = 1e-12;

// bell_boundary accepts an arccos argument this far outside [-1, 1].
inline constexpr double kArccosSlack = 1e-12;

}  // namespace histkit::tol
