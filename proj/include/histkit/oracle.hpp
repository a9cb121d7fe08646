#pragma once

#include <functional>

#include "histkit/qcore.hpp"

// Independent reference computations used by the verification suites and
// the tests. Nothing on the main evaluation path calls into this header.
namespace histkit::oracle {

// exp(m) by scaling and squaring with a degree-16 Taylor polynomial.
Matrix expm(const Matrix& m);

// Partial trace of a two-qubit operator over the second qubit, written as an
// explicit four-index contraction.
Matrix trace_out_second(const Matrix& rho4);

// Root of f on [lo, hi] by bisection; f(lo) and f(hi) must differ in sign.
double bisect(const std::function<double(double)>& f, double lo, double hi, double tol);

}  // namespace histkit::oracle
