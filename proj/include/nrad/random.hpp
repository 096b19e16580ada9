#ifndef NRAD_RANDOM_HPP
#define NRAD_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

#include "nrad/linalg.hpp"

namespace nrad {

/// PCG32 (XSH-RR output, 64-bit LCG state). Satisfies UniformRandomBitGenerator.
/// The stream id selects one of 2^63 independent sequences for the same seed.
class pcg32 {
public:
    using result_type = std::uint32_t;

    explicit pcg32(std::uint64_t seed = 0x853c49e6748fea9bULL, std::uint64_t stream = 0)
        : inc_((stream << 1u) | 1u) {
        next();
        state_ += seed;
        next();
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() { return next(); }

private:
    result_type next() {
        const std::uint64_t old = state_;
        state_ = old * 6364136223846793005ULL + inc_;
        const auto xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
        const auto rot = static_cast<std::uint32_t>(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
    }

    std::uint64_t state_ = 0;
    std::uint64_t inc_;
};

/// Draws from the standard complex Gaussian (E|z|^2 = 1) and related objects.
class gaussian_source {
public:
    gaussian_source(std::uint64_t seed, std::uint64_t stream) : rng_(seed, stream) {}

    double real() { return normal_(rng_); }

    complex cplx() {
        constexpr double s = 0.70710678118654752440;
        const double re = normal_(rng_);
        const double im = normal_(rng_);
        return {s * re, s * im};
    }

    Matrix ginibre(Eigen::Index n) {
        Matrix g(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
                g(i, j) = cplx();
        return g;
    }

    /// Haar-distributed unit vector.
    Vector unit_vector(Eigen::Index n) {
        Vector x(n);
        double norm = 0.0;
        do {
            for (Eigen::Index i = 0; i < n; ++i)
                x(i) = cplx();
            norm = x.norm();
        } while (norm == 0.0);
        return x / norm;
    }

    /// Haar-distributed unitary: QR of a Ginibre matrix with the phases of R's
    /// diagonal folded back into Q.
    Matrix unitary(Eigen::Index n) {
        const Matrix g = ginibre(n);
        Eigen::HouseholderQR<Matrix> qr(g);
        Matrix q = qr.householderQ() * Matrix::Identity(n, n);
        const Matrix& r = qr.matrixQR();
        for (Eigen::Index j = 0; j < n; ++j) {
            const double mag = std::abs(r(j, j));
            if (mag > 0.0)
                q.col(j) *= r(j, j) / mag;
        }
        return q;
    }

private:
    pcg32 rng_;
    std::normal_distribution<double> normal_;
};

} // namespace nrad

#endif // NRAD_RANDOM_HPP
