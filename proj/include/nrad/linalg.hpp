#ifndef NRAD_LINALG_HPP
#define NRAD_LINALG_HPP

// Dense complex kernels: adjoint, Hermitian eigendecomposition, SVD, polar
// absolute values, spectral functional calculus and the norms built on them.
//
// Every routine is a pure function of its arguments. Hermitian inputs are
// gated by a relative hermiticity tolerance and then symmetrized as
// (H + H*)/2 before any decomposition.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <string>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "nrad/errors.hpp"

namespace nrad {

using complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double machine_eps = std::numeric_limits<double>::epsilon();

/// Default check tolerance: 1e-9 * max(1, scale), scale being the largest
/// magnitude taking part in the comparison.
inline double tolerance(double scale) { return 1e-9 * std::max(1.0, std::abs(scale)); }

struct HermEigen {
    RealVector eigenvalues; // ascending
    Matrix eigenvectors;    // orthonormal columns
};

struct SvdResult {
    RealVector singular_values; // descending, >= 0
    Matrix left_vectors;
    Matrix right_vectors;
};

// ---------------------------------------------------------------------------
// argument checks

inline void require_nonempty(const Matrix& a, const char* op) {
    if (a.rows() == 0 || a.cols() == 0)
        throw dimension_error(std::string(op) + ": empty matrix");
}

inline void require_square(const Matrix& a, const char* op) {
    require_nonempty(a, op);
    if (a.rows() != a.cols())
        throw dimension_error(std::string(op) + ": expected a square matrix, got " +
                              std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

inline void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    require_square(a, op);
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw dimension_error(std::string(op) + ": operand dimensions differ");
}

inline void require_finite(const Matrix& a, const char* op) {
    if (!a.allFinite())
        throw non_finite(std::string(op) + ": matrix has NaN or Inf entries");
}

inline double max_abs_entry(const Matrix& a) {
    return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------------------
// elementary operations

inline Matrix adjoint(const Matrix& a) { return a.adjoint(); }

/// (H + H*)/2. Exactly Hermitian in floating point.
inline Matrix symmetrize(const Matrix& h) {
    Matrix s = h;
    const Eigen::Index n = h.rows();
    for (Eigen::Index i = 0; i < n; ++i) {
        s(i, i) = complex(h(i, i).real(), 0.0);
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const complex v = 0.5 * (h(i, j) + std::conj(h(j, i)));
            s(i, j) = v;
            s(j, i) = std::conj(v);
        }
    }
    return s;
}

inline double hermiticity_defect(const Matrix& h) { return max_abs_entry(h - h.adjoint()); }

/// Throws not_hermitian unless ||H - H*||_max <= tol (default 1e-12 ||H||_max).
inline void require_hermitian(const Matrix& h, const char* op, std::optional<double> tol = {}) {
    require_square(h, op);
    require_finite(h, op);
    const double limit = tol.value_or(1e-12 * max_abs_entry(h));
    const double defect = hermiticity_defect(h);
    if (defect > limit)
        throw not_hermitian(std::string(op) + ": ||H - H*||_max = " + std::to_string(defect) +
                            " exceeds " + std::to_string(limit));
}

struct Cartesian {
    Matrix real_part; // B = (A + A*)/2
    Matrix imag_part; // C = (A - A*)/(2i)
};

/// A = B + iC with B, C Hermitian.
inline Cartesian cartesian_decomp(const Matrix& a) {
    require_square(a, "cartesian_decomp");
    const Matrix adj = a.adjoint();
    return {0.5 * (a + adj), (a - adj) / complex(0.0, 2.0)};
}

// ---------------------------------------------------------------------------
// Hermitian eigenproblem

inline HermEigen herm_eigen(const Matrix& h, std::optional<double> hermiticity_tol = {}) {
    require_hermitian(h, "herm_eigen", hermiticity_tol);
    const Matrix s = symmetrize(h);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(s, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success)
        throw convergence_failure("herm_eigen: eigensolver did not converge");

    HermEigen out{solver.eigenvalues(), solver.eigenvectors()};

    const double n = static_cast<double>(s.rows());
    const double norm = out.eigenvalues.cwiseAbs().maxCoeff();
    const double residual_limit = 64.0 * n * machine_eps * norm;
    const Matrix residual =
        s * out.eigenvectors - out.eigenvectors * out.eigenvalues.asDiagonal();
    for (Eigen::Index k = 0; k < residual.cols(); ++k) {
        if (residual.col(k).norm() > residual_limit)
            throw convergence_failure("herm_eigen: residual bound unmet for eigenpair " +
                                      std::to_string(k));
    }
    const Matrix gram = out.eigenvectors.adjoint() * out.eigenvectors -
                        Matrix::Identity(s.rows(), s.cols());
    if (max_abs_entry(gram) > 64.0 * n * machine_eps)
        throw convergence_failure("herm_eigen: eigenvectors lost orthonormality");
    return out;
}

/// Eigenvalues only, ascending. Same hermiticity gate as herm_eigen.
inline RealVector herm_eigenvalues(const Matrix& h, std::optional<double> hermiticity_tol = {}) {
    require_hermitian(h, "herm_eigenvalues", hermiticity_tol);
    if (h.rows() == 1)
        return RealVector::Constant(1, h(0, 0).real());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(symmetrize(h), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw convergence_failure("herm_eigenvalues: eigensolver did not converge");
    return solver.eigenvalues();
}

/// ||H|| for Hermitian H: the largest |eigenvalue|.
inline double hermitian_norm(const Matrix& h) {
    const RealVector ev = herm_eigenvalues(h);
    return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

/// m(H) = inf <Hx, x> over unit x, i.e. the smallest eigenvalue.
inline double m_min(const Matrix& h) { return herm_eigenvalues(h)(0); }

namespace detail {

/// Largest eigenvalue of a matrix the caller guarantees to be Hermitian.
/// Reuses its workspace, so one instance per thread.
class TopEigenvalue {
public:
    explicit TopEigenvalue(Eigen::Index n) : solver_(n) {}

    double operator()(const Matrix& h) {
        if (h.rows() == 1)
            return h(0, 0).real();
        if (h.rows() == 2) {
            const double a = h(0, 0).real();
            const double d = h(1, 1).real();
            return 0.5 * (a + d) + std::hypot(0.5 * (a - d), std::abs(h(0, 1)));
        }
        solver_.compute(h, Eigen::EigenvaluesOnly);
        if (solver_.info() != Eigen::Success)
            throw convergence_failure("eigensolver did not converge");
        return solver_.eigenvalues()(h.rows() - 1);
    }

private:
    Eigen::SelfAdjointEigenSolver<Matrix> solver_;
};

/// Top eigenpair of a Hermitian matrix (eigenvector normalized).
inline std::pair<double, Vector> top_eigenpair(const Matrix& h) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success)
        throw convergence_failure("eigensolver did not converge");
    const Eigen::Index last = h.rows() - 1;
    Vector v = solver.eigenvectors().col(last);
    v.normalize();
    return {solver.eigenvalues()(last), std::move(v)};
}

} // namespace detail

// ---------------------------------------------------------------------------
// singular values and polar parts

inline SvdResult svd(const Matrix& a) {
    require_nonempty(a, "svd");
    require_finite(a, "svd");
    Eigen::BDCSVD<Matrix> dec(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    SvdResult out{dec.singularValues(), dec.matrixU(), dec.matrixV()};

    const double scale = a.norm();
    const Eigen::Index k = out.singular_values.size();
    const Matrix recon = out.left_vectors.leftCols(k) * out.singular_values.asDiagonal() *
                         out.right_vectors.leftCols(k).adjoint();
    const double n = static_cast<double>(std::max(a.rows(), a.cols()));
    if ((a - recon).norm() > 64.0 * n * machine_eps * scale)
        throw convergence_failure("svd: reconstruction residual bound unmet");
    return out;
}

/// sigma_max(A).
inline double operator_norm(const Matrix& a) {
    require_nonempty(a, "operator_norm");
    require_finite(a, "operator_norm");
    if (a.rows() == 1 || a.cols() == 1)
        return a.norm();
    Eigen::BDCSVD<Matrix> dec(a);
    return dec.singularValues()(0);
}

/// SVD-backed access to |A| = V S V* and |A*| = U S U* for square A, plus
/// functions of both computed directly from the nonnegative singular values.
class PolarParts {
public:
    explicit PolarParts(const Matrix& a) {
        require_square(a, "polar");
        SvdResult s = svd(a);
        sigma_ = std::move(s.singular_values);
        u_ = std::move(s.left_vectors);
        v_ = std::move(s.right_vectors);
    }

    const RealVector& singular_values() const noexcept { return sigma_; }
    double norm() const noexcept { return sigma_.size() ? sigma_(0) : 0.0; }

    /// f(|A|) = V f(S) V*.
    template <class F>
    Matrix left(F&& f) const {
        return spectral(v_, f);
    }

    /// f(|A*|) = U f(S) U*.
    template <class F>
    Matrix right(F&& f) const {
        return spectral(u_, f);
    }

    Matrix abs_left() const {
        return left([](double x) { return x; });
    }
    Matrix abs_right() const {
        return right([](double x) { return x; });
    }

private:
    template <class F>
    Matrix spectral(const Matrix& basis, F&& f) const {
        RealVector values(sigma_.size());
        for (Eigen::Index i = 0; i < sigma_.size(); ++i) {
            values(i) = f(sigma_(i));
            if (!std::isfinite(values(i)))
                throw domain_error("function undefined at singular value " +
                                   std::to_string(sigma_(i)));
        }
        return symmetrize(basis * values.asDiagonal() * basis.adjoint());
    }

    RealVector sigma_;
    Matrix u_;
    Matrix v_;
};

/// |A| = (A*A)^{1/2}.
inline Matrix abs_left(const Matrix& a) { return PolarParts(a).abs_left(); }

/// |A*| = (AA*)^{1/2}.
inline Matrix abs_right(const Matrix& a) { return PolarParts(a).abs_right(); }

// ---------------------------------------------------------------------------
// functional calculus

/// f(H) = V f(Lambda) V* for Hermitian H.
template <class F>
Matrix apply_herm_fn(const Matrix& h, F&& f) {
    const HermEigen eig = herm_eigen(h);
    RealVector values(eig.eigenvalues.size());
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        values(i) = f(eig.eigenvalues(i));
        if (!std::isfinite(values(i)))
            throw domain_error("apply_herm_fn: function undefined at eigenvalue " +
                               std::to_string(eig.eigenvalues(i)));
    }
    return symmetrize(eig.eigenvectors * values.asDiagonal() * eig.eigenvectors.adjoint());
}

} // namespace nrad

#endif // NRAD_LINALG_HPP
