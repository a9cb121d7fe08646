#include "histkit/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "histkit/tolerances.hpp"

namespace histkit {

namespace {

std::size_t dim_for(std::size_t n_qubits) { return std::size_t{1} << n_qubits; }

void require_distinct(const Labels& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (labels[i] == labels[j]) throw Error("duplicate qubit label " + std::string(name(labels[i])));
}

Labels concat(const Labels& a, const Labels& b) {
  Labels out = a;
  out.insert(out.end(), b.begin(), b.end());
  require_distinct(out);
  return out;
}

std::ptrdiff_t position(const Labels& labels, Qubit q) {
  auto it = std::find(labels.begin(), labels.end(), q);
  return it == labels.end() ? -1 : it - labels.begin();
}

// Bit of qubit at position `pos` in a big-endian index over n qubits.
int bit_at(std::size_t index, std::size_t pos, std::size_t n) {
  return static_cast<int>((index >> (n - 1 - pos)) & 1U);
}

// For each index over `target`, the index of the same basis state over
// `source`, where source is a permutation of target.
std::vector<std::size_t> permutation_map(const Labels& source, const Labels& target) {
  const std::size_t n = target.size();
  std::vector<std::size_t> src_pos(n);
  for (std::size_t t = 0; t < n; ++t) src_pos[t] = static_cast<std::size_t>(position(source, target[t]));
  std::vector<std::size_t> map(dim_for(n));
  for (std::size_t idx = 0; idx < map.size(); ++idx) {
    std::size_t s = 0;
    for (std::size_t t = 0; t < n; ++t)
      if (bit_at(idx, t, n)) s |= std::size_t{1} << (n - 1 - src_pos[t]);
    map[idx] = s;
  }
  return map;
}

void require_permutation(const Labels& source, const Labels& target) {
  require_distinct(target);
  if (source.size() != target.size()) throw Error("reorder: label sets differ");
  for (Qubit q : target)
    if (position(source, q) < 0) throw Error("reorder: label sets differ");
}

}  // namespace

std::string_view name(Qubit q) {
  switch (q) {
    case Qubit::C: return "C";
    case Qubit::A: return "A";
    case Qubit::B: return "B";
    case Qubit::DA: return "D_A";
    case Qubit::DB: return "D_B";
  }
  return "?";
}

std::string to_string(const Labels& labels) {
  std::string out = "(";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += name(labels[i]);
  }
  return out + ")";
}

// ---- Matrix ----

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<cplx>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error("ragged matrix initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Matrix Matrix::conj() const {
  Matrix out = *this;
  for (auto& x : out.data_) x = std::conj(x);
  return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix size mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix size mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(cplx s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(cplx s, Matrix a) { return a *= s; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix product size mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

Vector operator*(const Matrix& a, std::span<const cplx> v) {
  if (a.cols() != v.size()) throw Error("matrix-vector size mismatch");
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cplx s{};
    for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * v[k];
    out[i] = s;
  }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix outer(std::span<const cplx> u, std::span<const cplx> v) {
  Matrix out(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out(i, j) = u[i] * std::conj(v[j]);
  return out;
}

cplx trace(const Matrix& m) {
  cplx t{};
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

double max_norm(const Matrix& m) {
  double best = 0.0;
  for (const auto& x : m.data()) best = std::max(best, std::abs(x));
  return best;
}

double frobenius_norm(const Matrix& m) {
  double s = 0.0;
  for (const auto& x : m.data()) s += std::norm(x);
  return std::sqrt(s);
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("matrix size mismatch");
  double best = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) best = std::max(best, std::abs(a.data()[i] - b.data()[i]));
  return best;
}

bool is_hermitian(const Matrix& m, double tol) {
  if (!m.square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
  return true;
}

bool is_unitary(const Matrix& m, double tol) {
  if (!m.square()) return false;
  return max_abs_diff(m.adjoint() * m, Matrix::identity(m.rows())) <= tol;
}

Matrix fix_gauge(const Matrix& m) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < m.data().size(); ++i)
    if (std::abs(m.data()[i]) > std::abs(m.data()[best]) + 1e-15) best = i;
  const cplx pivot = m.data().empty() ? cplx{1.0} : m.data()[best];
  if (std::abs(pivot) == 0.0) return m;
  return (std::abs(pivot) / pivot) * m;
}

cplx inner(std::span<const cplx> u, std::span<const cplx> v) {
  if (u.size() != v.size()) throw Error("inner product size mismatch");
  cplx s{};
  for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

double norm(std::span<const cplx> v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

namespace pauli {
Matrix i2() { return Matrix::identity(2); }
Matrix x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
Matrix y() { return {{0.0, cplx{0.0, -1.0}}, {cplx{0.0, 1.0}, 0.0}}; }
Matrix z() { return {{1.0, 0.0}, {0.0, -1.0}}; }
}  // namespace pauli

// ---- Ket / Op ----

Ket::Ket(Labels labels, Vector amp) : labels_(std::move(labels)), amp_(std::move(amp)) {
  require_distinct(labels_);
  if (amp_.size() != dim_for(labels_.size()))
    throw Error("ket length " + std::to_string(amp_.size()) + " does not match labels " + to_string(labels_));
  for (const auto& a : amp_)
    if (std::isnan(a.real()) || std::isnan(a.imag())) throw Error("ket amplitude is NaN");
}

Ket Ket::basis(Qubit q, int bit) {
  Vector v(2);
  v[bit ? 1 : 0] = 1.0;
  return Ket({q}, std::move(v));
}

Ket Ket::plus(Qubit q) { return from_amplitudes(q, M_SQRT1_2, M_SQRT1_2); }
Ket Ket::minus(Qubit q) { return from_amplitudes(q, M_SQRT1_2, -M_SQRT1_2); }
Ket Ket::from_amplitudes(Qubit q, cplx a0, cplx a1) { return Ket({q}, {a0, a1}); }

double Ket::norm() const { return histkit::norm(amp_); }

Ket Ket::normalized() const {
  const double n = norm();
  if (n == 0.0) throw Error("cannot normalize a zero ket");
  Vector v = amp_;
  for (auto& x : v) x /= n;
  return Ket(labels_, std::move(v));
}

Op::Op(Labels labels, Matrix m) : labels_(std::move(labels)), m_(std::move(m)) {
  require_distinct(labels_);
  const std::size_t d = dim_for(labels_.size());
  if (m_.rows() != d || m_.cols() != d)
    throw Error("operator side " + std::to_string(m_.rows()) + " does not match labels " + to_string(labels_));
}

Op density_of(const Ket& k) { return Op(k.labels(), outer(k.amp(), k.amp())); }

Ket tensor(const Ket& a, const Ket& b) {
  Labels labels = concat(a.labels(), b.labels());
  Vector v(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) v[i * b.dim() + j] = a.amp()[i] * b.amp()[j];
  return Ket(std::move(labels), std::move(v));
}

Op tensor(const Op& a, const Op& b) {
  Labels labels = concat(a.labels(), b.labels());
  return Op(std::move(labels), kron(a.matrix(), b.matrix()));
}

Ket reorder(const Ket& k, const Labels& target) {
  require_permutation(k.labels(), target);
  const auto map = permutation_map(k.labels(), target);
  Vector v(k.dim());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = k.amp()[map[i]];
  return Ket(target, std::move(v));
}

Op reorder(const Op& op, const Labels& target) {
  require_permutation(op.labels(), target);
  const auto map = permutation_map(op.labels(), target);
  Matrix m(op.dim(), op.dim());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = op.matrix()(map[r], map[c]);
  return Op(target, std::move(m));
}

Op embed(const Op& op, const Labels& target) {
  require_distinct(target);
  Labels rest;
  for (Qubit q : target)
    if (position(op.labels(), q) < 0) rest.push_back(q);
  if (op.labels().size() + rest.size() != target.size()) throw Error("embed: operator label missing from target");
  Op padded = op;
  if (!rest.empty()) padded = tensor(op, Op(rest, Matrix::identity(dim_for(rest.size()))));
  return reorder(padded, target);
}

Op partial_trace(const Op& rho, const Labels& keep_set) {
  const Labels& labels = rho.labels();
  for (Qubit q : keep_set)
    if (position(labels, q) < 0) throw Error("partial_trace: keep label " + std::string(name(q)) + " not in operator");
  require_distinct(keep_set);

  Labels kept, traced;
  for (Qubit q : labels) (std::find(keep_set.begin(), keep_set.end(), q) != keep_set.end() ? kept : traced).push_back(q);

  // Move kept qubits to the front so each basis index splits as (kept, traced).
  Labels order = kept;
  order.insert(order.end(), traced.begin(), traced.end());
  const Op front = reorder(rho, order);
  const std::size_t dk = dim_for(kept.size());
  const std::size_t dt = dim_for(traced.size());

  Matrix out(dk, dk);
  for (std::size_t r = 0; r < dk; ++r)
    for (std::size_t c = 0; c < dk; ++c) {
      cplx s{};
      for (std::size_t t = 0; t < dt; ++t) s += front.matrix()(r * dt + t, c * dt + t);
      out(r, c) = s;
    }
  return Op(kept, std::move(out));
}

void validate_density(const Op& rho, double weight) {
  const Matrix& m = rho.matrix();
  if (!is_hermitian(m, tol::kDensityHermitian)) throw Error("density matrix is not Hermitian");
  const double tr = trace(m).real();
  if (std::abs(tr - weight) > tol::kDensityTrace)
    throw Error("density trace " + std::to_string(tr) + " differs from weight " + std::to_string(weight));
  const auto eig = herm_eig(m);
  if (eig.values.back() < tol::kDensityPsd) throw Error("density matrix is not PSD");
}

// ---- Eigensolver ----

EigenSystem herm_eig(const Matrix& h) {
  if (!h.square()) throw Error("herm_eig: matrix is not square");
  if (!is_hermitian(h, tol::kEigHermitian)) throw Error("herm_eig: matrix is not Hermitian");
  const std::size_t n = h.rows();

  // Work on the exactly Hermitian part.
  Matrix a = 0.5 * (h + h.adjoint());
  Matrix v = Matrix::identity(n);
  const double scale = frobenius_norm(a);

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        if (p != q) s += std::norm(a(p, q));
    return std::sqrt(s);
  };

  bool converged = scale == 0.0;
  for (int sweep = 0; sweep < tol::kJacobiMaxSweeps && !converged; ++sweep) {
    if (off_norm() <= tol::kJacobiOffDiagonal * scale) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const cplx phase = apq / mag;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // Rotation W acting on columns (p, q): diag(1, e^{-i phi}) * [[c, s], [-s, c]].
        const cplx w00 = c, w01 = s;
        const cplx w10 = -s * std::conj(phase), w11 = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * w00 + akq * w10;
          a(k, q) = akp * w01 + akq * w11;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(w00) * apk + std::conj(w10) * aqk;
          a(q, k) = std::conj(w01) * apk + std::conj(w11) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * w00 + vkq * w10;
          v(k, q) = vkp * w01 + vkq * w11;
        }
      }
    }
  }
  if (!converged && off_norm() > tol::kJacobiOffDiagonal * scale)
    throw Error("herm_eig: Jacobi iteration did not converge");

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  EigenSystem out{std::vector<double>(n), Matrix(n, n)};
  for (std::size_t c = 0; c < n; ++c) {
    out.values[c] = a(idx[c], idx[c]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, c) = v(r, idx[c]);
  }
  return out;
}

EigenSystem herm_eig(const Op& h) { return herm_eig(h.matrix()); }

Matrix psd_sqrt(const Matrix& rho) {
  const auto eig = herm_eig(rho);
  const std::size_t n = eig.values.size();
  if (n == 0) return rho;
  if (eig.values.back() < tol::kPsdReject) throw Error("psd_sqrt: matrix is not PSD");
  const double floor = tol::kPsdNoiseFloor * std::max(eig.values.front(), 0.0);

  Matrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lam = eig.values[k];
    if (lam <= floor) continue;
    const double root = std::sqrt(lam);
    for (std::size_t r = 0; r < n; ++r) {
      const cplx vr = root * eig.vectors(r, k);
      for (std::size_t c = 0; c < n; ++c) out(r, c) += vr * std::conj(eig.vectors(c, k));
    }
  }
  return out;
}

Op psd_sqrt(const Op& rho) { return Op(rho.labels(), psd_sqrt(rho.matrix())); }

}  // namespace histkit
