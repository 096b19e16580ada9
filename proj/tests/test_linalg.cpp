#include <cmath>

#include <gtest/gtest.h>

#include "nrad/linalg.hpp"
#include "nrad/random.hpp"
#include "oracles.hpp"

using nrad::complex;
using nrad::Matrix;

namespace {

Matrix diag(std::initializer_list<double> d) {
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
    Eigen::Index i = 0;
    for (double v : d) {
        m(i, i) = v;
        ++i;
    }
    return m;
}

} // namespace

TEST(Adjoint, JordanTransposes) {
    const Matrix j = oracle::jordan();
    Matrix want = Matrix::Zero(2, 2);
    want(1, 0) = 1.0;
    EXPECT_EQ(nrad::adjoint(j), want);
}

TEST(Adjoint, HermitianFixedAndInvolution) {
    oracle::rng g(1);
    const Matrix h = g.hermitian(4);
    EXPECT_EQ(nrad::adjoint(h), h.adjoint());
    EXPECT_LE((nrad::adjoint(h) - h).norm(), 1e-15);
    const Matrix a = g.gaussian(5);
    EXPECT_EQ(nrad::adjoint(nrad::adjoint(a)), a);
}

TEST(OperatorNorm, ClosedForms) {
    EXPECT_NEAR(nrad::operator_norm(oracle::jordan()), 1.0, 1e-15);
    EXPECT_NEAR(nrad::operator_norm(diag({1, -1})), 1.0, 1e-15);
}

TEST(OperatorNorm, MatchesGramEigenvalue) {
    oracle::rng g(2);
    for (int t = 0; t < 20; ++t) {
        const Matrix a = g.gaussian(3);
        const double via_eig = std::sqrt(nrad::herm_eigenvalues(a.adjoint() * a)(2));
        EXPECT_NEAR(nrad::operator_norm(a), via_eig, 1e-12 * via_eig);
        EXPECT_NEAR(nrad::operator_norm(a), oracle::norm2(a), 1e-12 * via_eig);
    }
}

TEST(OperatorNorm, EmptyThrows) { EXPECT_THROW(nrad::operator_norm(Matrix(0, 0)), nrad::dimension_error); }

TEST(HermEigen, DiagonalSorted) {
    const auto e = nrad::herm_eigen(diag({3, 1, 2}));
    EXPECT_DOUBLE_EQ(e.eigenvalues(0), 1.0);
    EXPECT_DOUBLE_EQ(e.eigenvalues(1), 2.0);
    EXPECT_DOUBLE_EQ(e.eigenvalues(2), 3.0);
}

TEST(HermEigen, SwapMatrix) {
    Matrix s = Matrix::Zero(2, 2);
    s(0, 1) = s(1, 0) = 1.0;
    const auto e = nrad::herm_eigen(s);
    EXPECT_NEAR(e.eigenvalues(0), -1.0, 1e-15);
    EXPECT_NEAR(e.eigenvalues(1), 1.0, 1e-15);
}

TEST(HermEigen, ResidualAndOrthonormality) {
    oracle::rng g(3);
    const Matrix h = g.hermitian(8);
    const auto e = nrad::herm_eigen(h);
    const double n = nrad::hermitian_norm(h);
    for (int k = 0; k < 8; ++k) {
        const Eigen::VectorXcd r = h * e.eigenvectors.col(k) - e.eigenvalues(k) * e.eigenvectors.col(k);
        EXPECT_LE(r.norm(), 64 * 8 * nrad::machine_eps * n);
    }
    EXPECT_LE((e.eigenvectors.adjoint() * e.eigenvectors - Matrix::Identity(8, 8)).norm(), 1e-13);
}

TEST(HermEigen, RejectsNonHermitian) {
    EXPECT_THROW(nrad::herm_eigen(oracle::jordan()), nrad::not_hermitian);
    EXPECT_THROW(nrad::m_min(oracle::jordan()), nrad::not_hermitian);
}

TEST(AbsValue, JordanLeftAndRight) {
    const Matrix j = oracle::jordan();
    EXPECT_LE((nrad::abs_left(j) - diag({0, 1})).norm(), 1e-15);
    EXPECT_LE((nrad::abs_right(j) - diag({1, 0})).norm(), 1e-15);
}

TEST(AbsValue, PsdFixedPoint) {
    oracle::rng g(4);
    const Matrix p = g.psd(4);
    EXPECT_LE((nrad::abs_left(p) - p).norm(), 1e-12 * p.norm());
}

TEST(AbsValue, NormAndSquare) {
    oracle::rng g(5);
    for (int t = 0; t < 10; ++t) {
        const Matrix a = g.gaussian(5);
        const Matrix l = nrad::abs_left(a);
        const double s = oracle::norm2(a);
        EXPECT_NEAR(nrad::hermitian_norm(l), s, 1e-12 * s);
        EXPECT_LE((l * l - a.adjoint() * a).norm(), 1e-12 * s * s);
        EXPECT_GE(nrad::m_min(l), -1e-12 * s);
        EXPECT_LE((nrad::abs_right(a) - nrad::abs_left(a.adjoint())).norm(), 1e-12 * s);
    }
}

TEST(AbsValue, NormalMatrixHasEqualParts) {
    oracle::rng g(6);
    const Matrix u = g.unitary(4);
    Matrix d = Matrix::Zero(4, 4);
    for (int i = 0; i < 4; ++i)
        d(i, i) = complex(g.real(), g.real());
    const Matrix a = u * d * u.adjoint();
    EXPECT_LE((nrad::abs_left(a) - nrad::abs_right(a)).norm(), 1e-12 * oracle::norm2(a));
}

TEST(AbsValue, NonSquareThrows) { EXPECT_THROW(nrad::abs_left(Matrix::Zero(2, 3)), nrad::dimension_error); }

TEST(ApplyHermFn, Examples) {
    oracle::rng g(7);
    const Matrix h = g.hermitian(4);
    EXPECT_LE((nrad::apply_herm_fn(h, [](double x) { return x; }) - h).norm(), 1e-13 * h.norm());
    EXPECT_LE((nrad::apply_herm_fn(diag({1, 2}), [](double x) { return x * x; }) - diag({1, 4})).norm(), 1e-14);
    const Matrix r = nrad::apply_herm_fn(diag({0, 1, 4}), [](double x) { return x + std::sqrt(x); });
    EXPECT_LE((r - diag({0, 2, 6})).norm(), 1e-14);
}

TEST(ApplyHermFn, DomainError) {
    EXPECT_THROW(nrad::apply_herm_fn(diag({-1, 1}), [](double x) { return std::sqrt(x); }), nrad::domain_error);
    EXPECT_THROW(nrad::apply_herm_fn(oracle::jordan(), [](double x) { return x; }), nrad::not_hermitian);
}

TEST(MMin, Examples) {
    EXPECT_DOUBLE_EQ(nrad::m_min(Matrix::Identity(3, 3)), 1.0);
    EXPECT_DOUBLE_EQ(nrad::m_min(diag({0.25, 0.5})), 0.25);
    const Matrix j = oracle::jordan();
    const Matrix half = (nrad::abs_left(j) - nrad::abs_right(j)) * 0.5;
    EXPECT_NEAR(nrad::m_min(half * half), 0.25, 1e-15);
}

TEST(Cartesian, HermitianHasZeroImaginaryPart) {
    oracle::rng g(8);
    const Matrix h = g.hermitian(3);
    const auto c = nrad::cartesian_decomp(h);
    EXPECT_LE((c.real_part - h).norm(), 1e-15 * h.norm());
    EXPECT_LE(c.imag_part.norm(), 1e-15 * h.norm());
}

TEST(Cartesian, Jordan) {
    const auto c = nrad::cartesian_decomp(oracle::jordan());
    Matrix b = Matrix::Zero(2, 2), im = Matrix::Zero(2, 2);
    b(0, 1) = b(1, 0) = 0.5;
    im(0, 1) = complex(0, -0.5);
    im(1, 0) = complex(0, 0.5);
    EXPECT_LE((c.real_part - b).norm(), 1e-16);
    EXPECT_LE((c.imag_part - im).norm(), 1e-16);
}

TEST(Cartesian, Reconstruction) {
    oracle::rng g(9);
    for (int t = 0; t < 20; ++t) {
        const Matrix a = g.gaussian(6);
        const auto c = nrad::cartesian_decomp(a);
        const Matrix back = c.real_part + complex(0, 1) * c.imag_part;
        EXPECT_LE(oracle::norm2(back - a), 8 * nrad::machine_eps * oracle::norm2(a));
        EXPECT_EQ(c.real_part, c.real_part.adjoint());
        EXPECT_EQ(c.imag_part, c.imag_part.adjoint());
    }
}

TEST(Random, DeterministicStreams) {
    nrad::gaussian_source a(42, 3), b(42, 3), c(42, 4);
    const Matrix ma = a.ginibre(4), mb = b.ginibre(4), mc = c.ginibre(4);
    EXPECT_EQ(ma, mb);
    EXPECT_NE(ma, mc);
}

TEST(Random, UnitaryAndUnitVector) {
    nrad::gaussian_source s(1, 1);
    const Matrix u = s.unitary(6);
    EXPECT_LE((u.adjoint() * u - Matrix::Identity(6, 6)).norm(), 1e-13);
    EXPECT_NEAR(s.unit_vector(7).norm(), 1.0, 1e-15);
}

TEST(Random, GaussianMoments) {
    nrad::gaussian_source s(5, 0);
    double m2 = 0;
    constexpr int n = 200000;
    for (int i = 0; i < n; ++i)
        m2 += std::norm(s.cplx());
    EXPECT_NEAR(m2 / n, 1.0, 0.01);
}
