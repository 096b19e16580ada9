#ifndef NRAD_RADIUS_HPP
#define NRAD_RADIUS_HPP

// Numerical radius w(A) = max over theta of lambda_max(H(theta)),
// H(theta) = (e^{i theta} A + e^{-i theta} A*)/2.
//
// The upper end of the enclosure is certified from grid samples of
// g(theta) = lambda_max(H(theta)) alone. On an angular interval of width w
// with (inflated) endpoint values a, b, two bounds hold for max g:
//
//   Lipschitz:     (a + b)/2 + ||A|| w/2
//   support lines: max over t in [0, w] of a cos t + c sin t,
//                  c = (b - a cos w)/sin w
//
// The second follows from W(A) lying in both half-planes
// Re(e^{i theta_k} z) <= g(theta_k), and is O(w^2) tight at smooth points of
// the numerical range. The lower end is always attained by a stored witness
// vector, and alternating ascent only ever raises it.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nrad/errors.hpp"
#include "nrad/linalg.hpp"
#include "nrad/random.hpp"

namespace nrad {

struct RadiusConfig {
    std::size_t grid_points = 1024;
    std::optional<double> target_width; // default 1e-9 * max(1, ||A||)
    int max_refinement_iters = 200;
    std::size_t oracle_samples = 0; // 0 = off
    std::uint64_t seed = 0;

    void validate() const {
        if (grid_points < 8)
            throw invalid_parameter("grid_points must be >= 8");
        if (target_width && !(*target_width > 0.0))
            throw invalid_parameter("target_width must be > 0");
        if (max_refinement_iters < 0)
            throw invalid_parameter("max_refinement_iters must be >= 0");
    }

    double width_for(double norm) const { return target_width.value_or(1e-9 * std::max(1.0, norm)); }
};

inline constexpr std::size_t max_grid_points = std::size_t{1} << 20;

struct RadiusEstimate {
    double lower = 0.0;
    double upper = 0.0;
    double theta_star = 0.0;
    Vector witness;
    std::size_t grid_points = 0;
    int refinement_iters = 0;
    std::size_t evaluations = 0;
    std::optional<double> oracle;
    std::uint64_t seed = 0;

    double width() const { return upper - lower; }
};

/// numerical_radius hit the grid cap before the enclosure was narrow enough.
class enclosure_not_reached : public error {
public:
    explicit enclosure_not_reached(RadiusEstimate best)
        : error("enclosure width " + std::to_string(best.width()) + " not reached within " +
                std::to_string(max_grid_points) + " grid points"),
          best_(std::move(best)) {}

    const RadiusEstimate& best() const noexcept { return best_; }

private:
    RadiusEstimate best_;
};

/// H(theta) = (e^{i theta} A + e^{-i theta} A*)/2.
inline Matrix herm_envelope(const Matrix& a, double theta) {
    require_square(a, "herm_envelope");
    const complex phase = std::polar(1.0, theta);
    return symmetrize(0.5 * (phase * a + std::conj(phase) * a.adjoint()));
}

namespace detail {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

inline double wrap_angle(double theta) {
    double t = std::fmod(theta, two_pi);
    if (t < 0.0)
        t += two_pi;
    return t >= two_pi ? 0.0 : t;
}

/// <Ax, x> = x* A x.
inline complex rayleigh(const Matrix& a, const Vector& x) { return x.dot(a * x); }

/// Upper bound for max g over an interval of width w from inflated endpoint values.
inline double interval_bound(double a, double b, double w, double lipschitz) {
    const double lip = 0.5 * (a + b) + 0.5 * lipschitz * w;
    const double half = std::sin(0.5 * w);
    const double c = ((b - a) + a * 2.0 * half * half) / std::sin(w);
    const double phi = std::atan2(c, a);
    double support = (phi >= 0.0 && phi <= w) ? std::hypot(a, c) : std::max(a, b);
    support += 16.0 * machine_eps * (std::abs(a) + std::abs(c));
    return std::min(lip, support);
}

struct Interval {
    double start;
    double width;
    double g_start;
    double g_end;
    double bound;
    bool active;
};

/// Samples g(theta) and keeps the certified per-interval bounds.
class AngleGrid {
public:
    explicit AngleGrid(const Matrix& a)
        : top_(a.rows()), h_(a.rows(), a.rows()) {
        const Cartesian parts = cartesian_decomp(a);
        real_ = parts.real_part;
        imag_ = parts.imag_part;
        norm_ = operator_norm(a);
        inflation_ = 16.0 * static_cast<double>(a.rows()) * machine_eps * norm_;
    }

    double norm() const noexcept { return norm_; }
    std::size_t evaluations() const noexcept { return evaluations_; }
    std::size_t resolution() const noexcept { return resolution_; }
    const std::vector<Interval>& intervals() const noexcept { return intervals_; }

    double g(double theta) {
        ++evaluations_;
        h_.noalias() = std::cos(theta) * real_ - std::sin(theta) * imag_;
        return top_(h_);
    }

    Matrix envelope(double theta) const { return std::cos(theta) * real_ - std::sin(theta) * imag_; }

    void uniform(std::size_t n) {
        resolution_ = n;
        const double w = two_pi / static_cast<double>(n);
        std::vector<double> values(n);
        for (std::size_t k = 0; k < n; ++k)
            values[k] = g(w * static_cast<double>(k));
        intervals_.clear();
        intervals_.reserve(n);
        for (std::size_t k = 0; k < n; ++k) {
            Interval iv{w * static_cast<double>(k), w, values[k], values[(k + 1) % n], 0.0, true};
            iv.bound = bound_of(iv);
            intervals_.push_back(iv);
        }
    }

    /// Bisects every active interval. Returns the best new sample (angle, value).
    std::pair<double, double> refine_active() {
        resolution_ *= 2;
        std::vector<Interval> next;
        next.reserve(intervals_.size() + count_active());
        std::pair<double, double> best{0.0, -std::numeric_limits<double>::infinity()};
        for (const Interval& iv : intervals_) {
            if (!iv.active) {
                next.push_back(iv);
                continue;
            }
            const double half = 0.5 * iv.width;
            const double mid = iv.start + half;
            const double gm = g(mid);
            if (gm > best.second)
                best = {mid, gm};
            Interval left{iv.start, half, iv.g_start, gm, 0.0, true};
            Interval right{mid, half, gm, iv.g_end, 0.0, true};
            left.bound = bound_of(left);
            right.bound = bound_of(right);
            next.push_back(left);
            next.push_back(right);
        }
        intervals_ = std::move(next);
        return best;
    }

    void prune(double threshold) {
        for (Interval& iv : intervals_)
            if (iv.active && iv.bound <= threshold)
                iv.active = false;
    }

    std::size_t count_active() const {
        std::size_t n = 0;
        for (const Interval& iv : intervals_)
            n += iv.active ? 1 : 0;
        return n;
    }

    double upper() const {
        double u = -std::numeric_limits<double>::infinity();
        for (const Interval& iv : intervals_)
            u = std::max(u, iv.bound);
        return u;
    }

    /// First (smallest-angle) sample attaining the maximum.
    std::pair<double, double> best_sample() const {
        std::pair<double, double> best{0.0, -std::numeric_limits<double>::infinity()};
        for (const Interval& iv : intervals_)
            if (iv.g_start > best.second)
                best = {iv.start, iv.g_start};
        return best;
    }

private:
    double bound_of(const Interval& iv) const {
        return interval_bound(iv.g_start + inflation_, iv.g_end + inflation_, iv.width, norm_);
    }

    Matrix real_;
    Matrix imag_;
    double norm_ = 0.0;
    double inflation_ = 0.0;
    TopEigenvalue top_;
    Matrix h_;
    std::vector<Interval> intervals_;
    std::size_t evaluations_ = 0;
    std::size_t resolution_ = 0;
};

/// Witness = top eigenvector of H(theta); lower = |<A w, w>|.
inline void adopt_angle(const Matrix& a, const AngleGrid& grid, double theta, RadiusEstimate& est) {
    auto [lambda, w] = top_eigenpair(grid.envelope(theta));
    (void)lambda;
    const double value = std::abs(rayleigh(a, w));
    if (est.witness.size() == 0 || value > est.lower) {
        est.lower = value;
        est.witness = std::move(w);
        est.theta_star = wrap_angle(theta);
    }
}

struct OracleResult {
    double value = 0.0;
    Vector witness;
};

inline OracleResult sample_oracle(const Matrix& a, std::size_t samples, std::uint64_t seed) {
    require_square(a, "radius_sample_oracle");
    gaussian_source source(seed, 0x6f7261636c65ULL);
    OracleResult out;
    Vector ax(a.rows());
    for (std::size_t s = 0; s < samples; ++s) {
        Vector x = source.unit_vector(a.rows());
        ax.noalias() = a * x;
        const double value = std::abs(x.dot(ax));
        if (out.witness.size() == 0 || value > out.value) {
            out.value = value;
            out.witness = std::move(x);
        }
    }
    return out;
}

} // namespace detail

/// Uniform sweep of g over N = cfg.grid_points angles in [0, 2 pi).
inline RadiusEstimate radius_sweep(const Matrix& a, const RadiusConfig& cfg = {}) {
    cfg.validate();
    require_square(a, "radius_sweep");
    require_finite(a, "radius_sweep");
    detail::AngleGrid grid(a);
    grid.uniform(cfg.grid_points);

    RadiusEstimate est;
    est.seed = cfg.seed;
    detail::adopt_angle(a, grid, grid.best_sample().first, est);
    est.upper = std::max(grid.upper(), est.lower);
    est.grid_points = grid.resolution();
    est.evaluations = grid.evaluations();
    return est;
}

namespace detail {

inline void ascend(const Matrix& a, RadiusEstimate& est, int max_iters, double stop) {
    complex z = rayleigh(a, est.witness);
    for (int it = 0; it < max_iters; ++it) {
        const double theta = (z == complex(0.0, 0.0)) ? 0.0 : -std::arg(z);
        auto [lambda, x] = top_eigenpair(herm_envelope(a, theta));
        (void)lambda;
        const complex zx = rayleigh(a, x);
        const double gain = std::abs(zx) - est.lower;
        if (!(gain > 0.0))
            break;
        est.lower = std::abs(zx);
        est.witness = std::move(x);
        est.theta_star = wrap_angle(theta);
        ++est.refinement_iters;
        z = zx;
        if (gain <= stop)
            break;
    }
    est.upper = std::max(est.upper, est.lower);
}

} // namespace detail

/// Alternating ascent from the current witness x:
///   theta <- -arg <Ax, x>,  x <- top eigenvector of H(theta).
/// Each step satisfies |<Ax', x'>| >= lambda_max(H(theta)) >= |<Ax, x>|, so
/// lower never decreases. upper is left to the grid certificate.
inline RadiusEstimate radius_refine(const Matrix& a, RadiusEstimate est, const RadiusConfig& cfg = {}) {
    cfg.validate();
    require_square(a, "radius_refine");
    if (est.witness.size() != a.rows())
        throw dimension_error("radius_refine: witness does not match the matrix dimension");
    detail::ascend(a, est, cfg.max_refinement_iters, 0.01 * cfg.width_for(operator_norm(a)));
    return est;
}

/// Maximum of |<Ax, x>| over `samples` Haar-random unit vectors.
inline double radius_sample_oracle(const Matrix& a, std::size_t samples, std::uint64_t seed) {
    if (samples < 1)
        throw invalid_parameter("radius_sample_oracle: samples must be >= 1");
    return detail::sample_oracle(a, samples, seed).value;
}

/// Certified enclosure of w(A): sweep, refine, then keep doubling the grid
/// resolution inside intervals whose bound is still above lower + width/2.
/// Throws enclosure_not_reached (with the best estimate) at 2^20 points.
inline RadiusEstimate numerical_radius(const Matrix& a, const RadiusConfig& cfg = {}) {
    cfg.validate();
    require_square(a, "numerical_radius");
    require_finite(a, "numerical_radius");

    detail::AngleGrid grid(a);
    const double target = cfg.width_for(grid.norm());
    grid.uniform(cfg.grid_points);

    RadiusEstimate est;
    est.seed = cfg.seed;
    detail::adopt_angle(a, grid, grid.best_sample().first, est);
    const double stop = 0.01 * target;
    detail::ascend(a, est, cfg.max_refinement_iters, stop);

    if (cfg.oracle_samples > 0) {
        detail::OracleResult oracle = detail::sample_oracle(a, cfg.oracle_samples, cfg.seed);
        est.oracle = oracle.value;
        if (oracle.value > est.lower) {
            const complex z = detail::rayleigh(a, oracle.witness);
            est.lower = std::abs(z);
            est.witness = std::move(oracle.witness);
            est.theta_star = detail::wrap_angle(z == complex(0.0, 0.0) ? 0.0 : -std::arg(z));
            detail::ascend(a, est, cfg.max_refinement_iters, stop);
        }
    }

    auto finish = [&](RadiusEstimate& e) {
        e.upper = std::max(grid.upper(), e.lower);
        e.grid_points = grid.resolution();
        e.evaluations = grid.evaluations();
    };

    for (;;) {
        grid.prune(est.lower + 0.5 * target);
        finish(est);
        if (est.width() <= target)
            return est;
        if (grid.resolution() * 2 > max_grid_points)
            throw enclosure_not_reached(est);
        const auto [theta, value] = grid.refine_active();
        if (value > est.lower) {
            detail::adopt_angle(a, grid, theta, est);
            detail::ascend(a, est, cfg.max_refinement_iters, stop);
        }
    }
}

} // namespace nrad

#endif // NRAD_RADIUS_HPP
