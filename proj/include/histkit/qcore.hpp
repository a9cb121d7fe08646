#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace histkit {

using cplx = std::complex<double>;
using Vector = std::vector<cplx>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Qubit identifiers. The enumerator order is the global ordering used for
// every composite space: basis index = big-endian bits over (C, A, B, DA, DB).
enum class Qubit : std::uint8_t { C = 0, A = 1, B = 2, DA = 3, DB = 4 };

using Labels = std::vector<Qubit>;

std::string_view name(Qubit q);
std::string to_string(const Labels& labels);

// Dense row-major complex matrix. Sizes here never exceed 32x32.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const cplx> data() const { return data_; }

  Matrix adjoint() const;
  Matrix transpose() const;
  Matrix conj() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(cplx s);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(cplx s, Matrix a);
Vector operator*(const Matrix& a, std::span<const cplx> v);

Matrix kron(const Matrix& a, const Matrix& b);
Matrix commutator(const Matrix& a, const Matrix& b);
Matrix outer(std::span<const cplx> u, std::span<const cplx> v);  // |u><v|

cplx trace(const Matrix& m);
double max_norm(const Matrix& m);
double frobenius_norm(const Matrix& m);
double max_abs_diff(const Matrix& a, const Matrix& b);
bool is_hermitian(const Matrix& m, double tol);
bool is_unitary(const Matrix& m, double tol);

// Multiply by the phase that makes the largest-magnitude entry real positive.
Matrix fix_gauge(const Matrix& m);

cplx inner(std::span<const cplx> u, std::span<const cplx> v);  // <u|v>
double norm(std::span<const cplx> v);

namespace pauli {
Matrix i2();
Matrix x();
Matrix y();
Matrix z();
}  // namespace pauli

// State vector over an ordered list of qubits. Unnormalized values are
// allowed; the amplitude count always equals 2^(#labels).
class Ket {
 public:
  Ket() = default;
  Ket(Labels labels, Vector amp);

  static Ket basis(Qubit q, int bit);
  static Ket plus(Qubit q);
  static Ket minus(Qubit q);
  static Ket from_amplitudes(Qubit q, cplx a0, cplx a1);

  const Labels& labels() const { return labels_; }
  const Vector& amp() const { return amp_; }
  std::size_t dim() const { return amp_.size(); }

  double norm() const;
  Ket normalized() const;

 private:
  Labels labels_;
  Vector amp_;
};

// Square operator over an ordered list of qubits.
class Op {
 public:
  Op() = default;
  Op(Labels labels, Matrix m);

  const Labels& labels() const { return labels_; }
  const Matrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.rows(); }

 private:
  Labels labels_;
  Matrix m_;
};

// |k><k|
Op density_of(const Ket& k);

Ket tensor(const Ket& a, const Ket& b);
Op tensor(const Op& a, const Op& b);

// Permute an operator or ket onto a reordering of its own labels.
Ket reorder(const Ket& k, const Labels& target);
Op reorder(const Op& op, const Labels& target);

// op ⊗ identity on the labels of `target` that op lacks, in target order.
Op embed(const Op& op, const Labels& target);

// Trace out every label not in `keep`. Kept labels retain their input order.
Op partial_trace(const Op& rho, const Labels& keep);

// Throws unless rho is Hermitian, PSD and has trace `weight`.
void validate_density(const Op& rho, double weight);

struct EigenSystem {
  std::vector<double> values;  // descending
  Matrix vectors;              // orthonormal columns, matching values
};

// Cyclic Jacobi eigensolver for Hermitian matrices.
EigenSystem herm_eig(const Matrix& h);
EigenSystem herm_eig(const Op& h);

// Principal square root of a positive-semidefinite matrix. Eigenvalues
// at the floating-point noise floor are treated as zero.
Matrix psd_sqrt(const Matrix& rho);
Op psd_sqrt(const Op& rho);

}  // namespace histkit
