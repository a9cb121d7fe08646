#include "histkit/oracle.hpp"

#include <cmath>

namespace histkit::oracle {

Matrix expm(const Matrix& m) {
  if (!m.square()) throw Error("expm: matrix is not square");
  const std::size_t n = m.rows();
  // Bring the norm below 1/2 before summing the series.
  double norm1 = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    double col = 0.0;
    for (std::size_t r = 0; r < n; ++r) col += std::abs(m(r, c));
    norm1 = std::max(norm1, col);
  }
  int squarings = 0;
  while (norm1 > 0.5) {
    norm1 /= 2.0;
    ++squarings;
  }
  const Matrix a = std::ldexp(1.0, -squarings) * m;

  Matrix sum = Matrix::identity(n);
  Matrix term = Matrix::identity(n);
  for (int k = 1; k <= 16; ++k) {
    term = (1.0 / k) * (term * a);
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

Matrix trace_out_second(const Matrix& rho4) {
  if (rho4.rows() != 4 || rho4.cols() != 4) throw Error("trace_out_second: 4x4 input required");
  Matrix out(2, 2);
  for (int a = 0; a < 2; ++a)
    for (int a2 = 0; a2 < 2; ++a2)
      for (int b = 0; b < 2; ++b)
        for (int b2 = 0; b2 < 2; ++b2)
          if (b == b2) out(a, a2) += rho4(2 * a + b, 2 * a2 + b2);
  return out;
}

double bisect(const std::function<double(double)>& f, double lo, double hi, double tol) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) throw Error("bisect: root is not bracketed");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace histkit::oracle
