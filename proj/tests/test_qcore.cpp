#include <gtest/gtest.h>

#include <cmath>

#include "histkit/analysis.hpp"
#include "histkit/protocol.hpp"
#include "histkit/qcore.hpp"
#include "support.hpp"

using namespace histkit;

namespace {

const Labels kAB{Qubit::A, Qubit::B};

Op phi_minus_density() {
  return density_of(Ket(kAB, {M_SQRT1_2, 0.0, 0.0, -M_SQRT1_2}));
}

void expect_matrix_near(const Matrix& a, const Matrix& b, double tol) {
  ASSERT_EQ(a.rows(), b.rows());
  ASSERT_EQ(a.cols(), b.cols());
  EXPECT_LE(max_abs_diff(a, b), tol);
}

}  // namespace

TEST(Tensor, BasisKets) {
  const Ket k = tensor(Ket::basis(Qubit::A, 0), Ket::basis(Qubit::B, 1));
  EXPECT_EQ(k.labels(), kAB);
  const Vector expected{0.0, 1.0, 0.0, 0.0};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(k.amp()[i], expected[i]);
}

TEST(Tensor, IdentityOps) {
  const Op i4 = tensor(Op({Qubit::A}, pauli::i2()), Op({Qubit::B}, pauli::i2()));
  expect_matrix_near(i4.matrix(), Matrix::identity(4), 0.0);
}

TEST(Tensor, UniformSuperposition) {
  const Ket k = tensor(Ket::plus(Qubit::A), Ket::plus(Qubit::B));
  for (const auto& a : k.amp()) EXPECT_NEAR(std::abs(a - cplx{0.5}), 0.0, 1e-15);
}

TEST(Tensor, DuplicateLabelRejected) {
  try {
    tensor(Ket::plus(Qubit::A), Ket::plus(Qubit::A));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("duplicate qubit label"), std::string::npos);
  }
  EXPECT_THROW(tensor(Op({Qubit::B}, pauli::x()), Op({Qubit::B}, pauli::z())), Error);
}

TEST(Tensor, MatchesIndexLoopOracle) {
  testkit::Gen gen(11);
  for (int k = 0; k < 20; ++k) {
    const Matrix a = gen.density(2), b = gen.density(4);
    const Op t = tensor(Op({Qubit::C}, a), Op({Qubit::A, Qubit::B}, b));
    expect_matrix_near(t.matrix(), testkit::kron_oracle(a, b), 1e-15);
  }
}

TEST(Ket, RejectsBadInput) {
  EXPECT_THROW(Ket(kAB, {1.0, 0.0}), Error);
  EXPECT_THROW(Ket({Qubit::A}, {NAN, 0.0}), Error);
  EXPECT_THROW(Ket({Qubit::A}, {0.0, 0.0}).normalized(), Error);
  EXPECT_THROW(Op(kAB, Matrix::identity(2)), Error);
}

TEST(Reorder, SwapsTensorFactors) {
  testkit::Gen gen(3);
  const Matrix a = gen.density(2), b = gen.density(2);
  const Op ab = tensor(Op({Qubit::A}, a), Op({Qubit::B}, b));
  const Op ba = reorder(ab, {Qubit::B, Qubit::A});
  expect_matrix_near(ba.matrix(), testkit::kron_oracle(b, a), 1e-15);
  EXPECT_THROW(reorder(ab, {Qubit::A, Qubit::C}), Error);
}

TEST(Embed, PadsWithIdentity) {
  const Op x({Qubit::B}, pauli::x());
  const Op e = embed(x, {Qubit::A, Qubit::B, Qubit::C});
  expect_matrix_near(e.matrix(), testkit::kron_oracle(testkit::kron_oracle(pauli::i2(), pauli::x()), pauli::i2()),
                     0.0);
}

TEST(PartialTrace, MaximallyEntangledReducesToMixed) {
  const Op r = partial_trace(phi_minus_density(), {Qubit::A});
  expect_matrix_near(r.matrix(), cplx{0.5} * Matrix::identity(2), 1e-15);
}

TEST(PartialTrace, ProductFactorizes) {
  testkit::Gen gen(5);
  for (int k = 0; k < 20; ++k) {
    const Matrix a = gen.density(2), b = gen.density(2);
    const Op p = tensor(Op({Qubit::A}, a), Op({Qubit::B}, b));
    expect_matrix_near(partial_trace(p, {Qubit::A}).matrix(), a, 1e-12);
    expect_matrix_near(partial_trace(p, {Qubit::B}).matrix(), b, 1e-12);
  }
}

TEST(PartialTrace, AveragedStateMatchesIndexContraction) {
  const Op rho = averaged_state(conditional_states_kraus(ProtocolConfig::canonical(0.6, M_PI / 2)));
  Matrix oracle(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) oracle(i, j) += rho.matrix()(2 * i + k, 2 * j + k);
  expect_matrix_near(partial_trace(rho, {Qubit::A}).matrix(), oracle, 1e-15);
}

TEST(PartialTrace, KeepOrderFollowsInput) {
  testkit::Gen gen(8);
  const Matrix a = gen.density(2), b = gen.density(2), c = gen.density(2);
  const Op abc = tensor(tensor(Op({Qubit::A}, a), Op({Qubit::B}, b)), Op({Qubit::C}, c));
  const Op kept = partial_trace(abc, {Qubit::C, Qubit::A});
  EXPECT_EQ(kept.labels(), (Labels{Qubit::A, Qubit::C}));
  expect_matrix_near(kept.matrix(), testkit::kron_oracle(a, c), 1e-14);
}

TEST(PartialTrace, RejectsForeignLabel) {
  EXPECT_THROW(partial_trace(phi_minus_density(), {Qubit::C}), Error);
}

TEST(HermEig, PauliZ) {
  const auto e = herm_eig(pauli::z());
  EXPECT_NEAR(e.values[0], 1.0, 1e-15);
  EXPECT_NEAR(e.values[1], -1.0, 1e-15);
}

TEST(HermEig, PauliAlongRandomAxis) {
  testkit::Gen gen(17);
  for (int k = 0; k < 50; ++k) {
    const auto e = herm_eig(pauli_along(gen.axis()));
    EXPECT_NEAR(e.values[0], 1.0, 1e-13);
    EXPECT_NEAR(e.values[1], -1.0, 1e-13);
  }
}

TEST(HermEig, CorrelationGramAtProjectiveQuarterTurn) {
  const auto h = horodecki(averaged_state(conditional_states_kraus(ProtocolConfig::canonical(1.0, M_PI / 2))));
  Matrix u(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      for (int k = 0; k < 3; ++k) u(r, c) += h.correlations[k][r] * h.correlations[k][c];
  const auto e = herm_eig(u);
  EXPECT_NEAR(e.values[0], 4.0 / 9.0, 1e-12);
  EXPECT_NEAR(e.values[1], 1.0 / 9.0, 1e-12);
  EXPECT_NEAR(e.values[2], 0.0, 1e-12);
}

TEST(HermEig, RandomReconstructionProperty) {
  testkit::Gen gen(23);
  for (std::size_t n : {2u, 3u, 5u, 8u, 16u, 32u}) {
    Matrix h(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      h(r, r) = gen.normal();
      for (std::size_t c = r + 1; c < n; ++c) {
        h(r, c) = gen.complex_normal();
        h(c, r) = std::conj(h(r, c));
      }
    }
    const auto e = herm_eig(h);
    double tr = 0.0;
    for (double v : e.values) tr += v;
    EXPECT_NEAR(tr, trace(h).real(), 1e-11);
    expect_matrix_near(e.vectors * Matrix::diagonal(e.values) * e.vectors.adjoint(), h, 1e-10);
    for (std::size_t k = 1; k < n; ++k) EXPECT_GE(e.values[k - 1], e.values[k]);
  }
}

TEST(HermEig, RejectsNonHermitian) {
  EXPECT_THROW(herm_eig(Matrix{{0.0, 1.0}, {0.0, 0.0}}), Error);
  EXPECT_THROW(herm_eig(Matrix(2, 3)), Error);
}

TEST(PsdSqrt, Identity) { expect_matrix_near(psd_sqrt(Matrix::identity(4)), Matrix::identity(4), 1e-15); }

TEST(PsdSqrt, Diagonal) {
  const double d[] = {4.0, 1.0, 0.0, 0.0};
  const double r[] = {2.0, 1.0, 0.0, 0.0};
  expect_matrix_near(psd_sqrt(Matrix::diagonal(d)), Matrix::diagonal(r), 1e-15);
}

TEST(PsdSqrt, SquaresBackToAveragedState) {
  const Op rho = averaged_state(conditional_states_kraus(ProtocolConfig::canonical(0.8, 1.0)));
  const Matrix s = psd_sqrt(rho.matrix());
  expect_matrix_near(s * s, rho.matrix(), 1e-9);
  EXPECT_TRUE(is_hermitian(s, 1e-14));
}

TEST(PsdSqrt, RandomDensitySquaresBack) {
  testkit::Gen gen(29);
  for (int k = 0; k < 20; ++k) {
    const Matrix rho = gen.density(4);
    const Matrix s = psd_sqrt(rho);
    expect_matrix_near(s * s, rho, 1e-12);
  }
}

TEST(PsdSqrt, ClampsNoiseAndRejectsNegative) {
  const double noisy[] = {1.0, -1e-11};
  const Matrix s = psd_sqrt(Matrix::diagonal(noisy));
  EXPECT_FALSE(std::isnan(s(1, 1).real()));
  EXPECT_EQ(s(1, 1), cplx{0.0});
  const double neg[] = {1.0, -1e-6};
  try {
    psd_sqrt(Matrix::diagonal(neg));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("not PSD"), std::string::npos);
  }
}

TEST(ValidateDensity, ChecksEachCondition) {
  EXPECT_NO_THROW(validate_density(phi_minus_density(), 1.0));
  EXPECT_THROW(validate_density(Op({Qubit::A}, Matrix{{0.5, 1.0}, {0.0, 0.5}}), 1.0), Error);
  EXPECT_THROW(validate_density(Op({Qubit::A}, Matrix{{1.5, 0.0}, {0.0, -0.5}}), 1.0), Error);
  EXPECT_THROW(validate_density(Op({Qubit::A}, pauli::i2()), 1.0), Error);
}
