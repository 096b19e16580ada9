#ifndef NRAD_BOUNDS_HPP
#define NRAD_BOUNDS_HPP

// Registry of numerical-radius inequalities, each evaluatable on a concrete
// matrix.
//
// Every quantity that depends on w(.) is evaluated twice: at the lower end of
// the enclosure (the reported point value) and at the upper end. All terms are
// non-decreasing in w, so a link "lhs <= rhs" is flagged only when
//   lhs(lower) - rhs(upper) > tau,
// which is recorded as tolerance_used = tau + (rhs(upper) - rhs(lower)).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nrad/errors.hpp"
#include "nrad/linalg.hpp"
#include "nrad/radius.hpp"

namespace nrad {

struct BoundReport {
    std::string bound_id;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0; // rhs - lhs
    bool violated = false;
    double tolerance_used = 0.0;

    double relative_slack() const { return slack / std::max(1.0, std::abs(rhs)); }
};

struct ChainReport {
    std::string chain_id;
    std::vector<double> terms;
    std::vector<BoundReport> links; // links[k]: terms[k] <= terms[k+1]
    std::vector<BoundReport> checks; // identities evaluated alongside the chain

    bool violated() const {
        return std::any_of(links.begin(), links.end(), [](const BoundReport& b) { return b.violated; });
    }

    bool checks_failed() const {
        return std::any_of(checks.begin(), checks.end(), [](const BoundReport& b) { return b.violated; });
    }

    /// The violated link if there is one, otherwise the link with the least relative slack.
    const BoundReport& worst_link() const {
        const BoundReport* worst = &links.front();
        for (const BoundReport& b : links) {
            if (b.violated != worst->violated) {
                if (b.violated)
                    worst = &b;
                continue;
            }
            if (b.relative_slack() < worst->relative_slack())
                worst = &b;
        }
        return *worst;
    }
};

/// f, g and g^{-1} on [0, inf) for the functional refinement of the Kittaneh bound.
struct FunctionPair {
    std::string name;
    std::function<double(double)> f;
    std::function<double(double)> g;
    std::function<double(double)> g_inverse;

    /// Necessary conditions on a finite grid only: g o f non-decreasing and
    /// midpoint convex on {0, 0.25, ..., 4}, g^{-1} non-decreasing there, and
    /// g^{-1}(g(x)) = x on {0, 0.5, 1, 2, 10}. Throws hypothesis_failed.
    void verify() const {
        std::vector<double> grid;
        for (int k = 0; k <= 16; ++k)
            grid.push_back(0.25 * k);
        std::vector<double> h;
        for (double x : grid)
            h.push_back(g(f(x)));
        for (std::size_t k = 1; k < grid.size(); ++k) {
            const double slop = 1e-12 * std::max({1.0, std::abs(h[k]), std::abs(h[k - 1])});
            if (h[k] < h[k - 1] - slop)
                throw hypothesis_failed(name + ": g o f decreases near x = " + std::to_string(grid[k]));
            const double gi_prev = g_inverse(grid[k - 1]);
            const double gi = g_inverse(grid[k]);
            if (gi < gi_prev - 1e-12 * std::max({1.0, std::abs(gi), std::abs(gi_prev)}))
                throw hypothesis_failed(name + ": g^-1 decreases near y = " + std::to_string(grid[k]));
        }
        for (std::size_t k = 1; k + 1 < grid.size(); ++k) {
            const double slop = 1e-12 * std::max({1.0, std::abs(h[k - 1]), std::abs(h[k + 1])});
            if (h[k] > 0.5 * (h[k - 1] + h[k + 1]) + slop)
                throw hypothesis_failed(name + ": g o f is not midpoint convex at x = " +
                                        std::to_string(grid[k]));
        }
        for (double x : {0.0, 0.5, 1.0, 2.0, 10.0}) {
            if (std::abs(g_inverse(g(x)) - x) > 1e-12 * std::max(1.0, x))
                throw hypothesis_failed(name + ": g^-1(g(x)) != x at x = " + std::to_string(x));
        }
    }

    static FunctionPair identity() {
        auto id = [](double x) { return x; };
        return {"identity", id, id, id};
    }

    /// f(x) = x^r, g(x) = x + sqrt(x), g^{-1}(y) = (2y + 1 - sqrt(4y + 1))/2.
    static FunctionPair power_sqrt(double r) {
        if (!(r > 0.0))
            throw invalid_parameter("power_sqrt: exponent must be positive");
        return {"x^" + format_exponent(r) + ", x+sqrt(x)",
                [r](double x) { return std::pow(x, r); },
                [](double x) { return x + std::sqrt(x); },
                [](double y) { return 0.5 * (2.0 * y + 1.0 - std::sqrt(4.0 * y + 1.0)); }};
    }

    static std::string format_exponent(double r) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%g", r);
        return buf;
    }
};

// ---------------------------------------------------------------------------
// registry

struct BoundInfo {
    std::string id;
    std::string description;
    int arity;
    std::string source;
    bool diagnostic;
};

inline const std::vector<BoundInfo>& catalog_list() {
    static const std::vector<BoundInfo> registry = {
        {"B0", "||A||/2 <= w(A) <= ||A||", 1, "norm equivalence", false},
        {"KIT", "w(A) <= ||(|A| + |A*|)||/2", 1, "Kittaneh upper bound", false},
        {"SQ", "||A*A + AA*||/4 <= w(A)^2 <= ||A*A + AA*||/2", 1, "two-sided square bound", false},
        {"LEM1+", "||A + A*||/2 <= w(A)", 1, "real-part lower bound", false},
        {"LEM1-", "||A - A*||/2 <= w(A)", 1, "imaginary-part lower bound", false},
        {"T1", "||(|A|^2+|A*|^2)||/4 <= (||A+A*||^2 + ||A-A*||^2)/8 <= w(A)^2", 1,
         "parallelogram refinement", false},
        {"LEM-SUM", "||A+B|| <= sqrt(||A*A + B*B|| + 2 w(B*A))", 2, "norm of a sum", false},
        {"T2", "||(|A|^2+|A*|^2)||/4 <= sqrt(2 w^4(A) + w((A*-A)^2 (A*+A)^2)/8)/2 <= w(A)^2", 1,
         "Cartesian refinement", false},
        {"LEM-POSDIFF", "||P-Q|| <= max(||P||,||Q||) - min(m(P), m(Q)) for P, Q >= 0", 2,
         "difference of positive operators", false},
        {"T3", "w(A)^2 <= ||(|A|^2+|A*|^2)/2|| - m(((|A|-|A*|)/2)^2)", 1, "refined square upper bound",
         false},
        {"T3-PRINTED", "w(A)^2 <= (||(|A|^2+|A*|^2)|| - m((|A|-|A*|)^2))/2 (diagnostic, fails on the Jordan block)",
         1, "variant with unbalanced coefficients", true},
        {"FUNC", "f(w(A)) <= ||g^-1((g o f(|A|) + g o f(|A*|))/2)|| <= ||f(|A|) + f(|A*|)||/2", 1,
         "functional refinement", false},
        {"COR", "w^r(A) <= ||X + I - sqrt(2X + I)||/2 <= |||A|^r + |A*|^r||/2, r >= 2", 1,
         "power refinement with g(x) = x + sqrt(x)", false},
    };
    return registry;
}

inline const BoundInfo* catalog_find(std::string_view id) {
    for (const BoundInfo& info : catalog_list())
        if (info.id == id)
            return &info;
    return nullptr;
}

inline const BoundInfo& catalog_lookup(std::string_view id) {
    if (const BoundInfo* info = catalog_find(id))
        return *info;
    std::string valid;
    for (const BoundInfo& info : catalog_list())
        valid += (valid.empty() ? "" : ", ") + info.id;
    throw invalid_parameter("unknown bound id '" + std::string(id) + "'; valid ids: " + valid);
}

// ---------------------------------------------------------------------------
// per-matrix cache

/// Enclosure endpoints of a numerical radius.
struct RadiusRange {
    double lo = 0.0;
    double hi = 0.0;
};

/// Lazily computed quantities shared by the bounds for one matrix.
class MatrixContext {
public:
    explicit MatrixContext(Matrix a, RadiusConfig cfg = {}) : a_(std::move(a)), cfg_(std::move(cfg)) {
        require_square(a_, "bounds");
        require_finite(a_, "bounds");
    }

    const Matrix& matrix() const noexcept { return a_; }
    const RadiusConfig& config() const noexcept { return cfg_; }

    const PolarParts& polar() {
        if (!polar_)
            polar_.emplace(a_);
        return *polar_;
    }

    const Cartesian& cartesian() {
        if (!cart_)
            cart_ = cartesian_decomp(a_);
        return *cart_;
    }

    double norm() { return polar().norm(); }

    /// ||A*A + AA*|| = |||A|^2 + |A*|^2||.
    double square_sum_norm() {
        if (!square_sum_norm_) {
            const Matrix adj = a_.adjoint();
            square_sum_norm_ = herm_eigenvalues(symmetrize(adj * a_ + a_ * adj)).maxCoeff();
        }
        return *square_sum_norm_;
    }

    const RadiusEstimate& radius_estimate() {
        if (!radius_)
            radius_ = numerical_radius(a_, cfg_);
        return *radius_;
    }

    RadiusRange radius() {
        const RadiusEstimate& e = radius_estimate();
        return {e.lower, e.upper};
    }

    /// Enclosure of w(M) for some other matrix, under this context's configuration.
    RadiusRange radius_of(const Matrix& m) const {
        const RadiusEstimate e = numerical_radius(m, cfg_);
        return {e.lower, e.upper};
    }

private:
    Matrix a_;
    RadiusConfig cfg_;
    std::optional<PolarParts> polar_;
    std::optional<Cartesian> cart_;
    std::optional<double> square_sum_norm_;
    std::optional<RadiusEstimate> radius_;
};

// ---------------------------------------------------------------------------
// report construction

namespace detail {

inline double chain_scale(const std::vector<double>& lo, const std::vector<double>& hi) {
    double s = 0.0;
    for (double v : lo)
        s = std::max(s, std::abs(v));
    for (double v : hi)
        s = std::max(s, std::abs(v));
    return s;
}

inline BoundReport compare(std::string id, double lhs, double rhs, double rhs_hi, double scale) {
    BoundReport b;
    b.bound_id = std::move(id);
    b.lhs = lhs;
    b.rhs = rhs;
    b.slack = rhs - lhs;
    b.tolerance_used = tolerance(scale) + std::max(0.0, rhs_hi - rhs);
    b.violated = lhs - rhs > b.tolerance_used;
    return b;
}

/// terms evaluated at the lower (lo) and upper (hi) ends of every enclosure.
inline ChainReport build_chain(const std::string& id, std::vector<double> lo, const std::vector<double>& hi) {
    ChainReport c;
    c.chain_id = id;
    const double scale = chain_scale(lo, hi);
    for (std::size_t k = 0; k + 1 < lo.size(); ++k)
        c.links.push_back(compare(id + ":" + std::to_string(k), lo[k], lo[k + 1], hi[k + 1], scale));
    c.terms = std::move(lo);
    return c;
}

inline BoundReport build_bound(const std::string& id, double lhs, double rhs, double rhs_hi, double scale) {
    return compare(id, lhs, rhs, rhs_hi, std::max({scale, std::abs(lhs), std::abs(rhs_hi)}));
}

/// Equality check |a - b| <= tau + extra, encoded as lhs = |a - b|, rhs = 0.
inline BoundReport equality_check(std::string id, double a, double b, double extra, double scale) {
    BoundReport r;
    r.bound_id = std::move(id);
    r.lhs = std::abs(a - b);
    r.rhs = 0.0;
    r.slack = -r.lhs;
    r.tolerance_used = tolerance(scale) + extra;
    r.violated = r.lhs > r.tolerance_used;
    return r;
}

inline double pow4(double x) { return (x * x) * (x * x); }

} // namespace detail

// ---------------------------------------------------------------------------
// single-matrix bounds

/// [||A||/2, w(A), ||A||]
inline ChainReport eval_chain_B0(MatrixContext& ctx) {
    const double n = ctx.norm();
    const RadiusRange w = ctx.radius();
    return detail::build_chain("B0", {0.5 * n, w.lo, n}, {0.5 * n, w.hi, n});
}

/// w(A) <= ||(|A| + |A*|)||/2
inline BoundReport eval_bound_KIT(MatrixContext& ctx) {
    const PolarParts& p = ctx.polar();
    const double rhs = 0.5 * hermitian_norm(p.abs_left() + p.abs_right());
    const RadiusRange w = ctx.radius();
    return detail::build_bound("KIT", w.lo, rhs, rhs, w.hi);
}

/// [S/4, w^2, S/2] with S = |||A|^2 + |A*|^2||
inline ChainReport eval_chain_SQ(MatrixContext& ctx) {
    const double s = ctx.square_sum_norm();
    const RadiusRange w = ctx.radius();
    return detail::build_chain("SQ", {0.25 * s, w.lo * w.lo, 0.5 * s}, {0.25 * s, w.hi * w.hi, 0.5 * s});
}

/// ||A + sign A*||/2 <= w(A); sign = +1 or -1.
inline BoundReport eval_bound_LEM1(MatrixContext& ctx, int sign) {
    if (sign != 1 && sign != -1)
        throw invalid_parameter("eval_bound_LEM1: sign must be +1 or -1");
    const Cartesian& parts = ctx.cartesian();
    // ||A + A*|| = 2||B||, ||A - A*|| = 2||C||
    const double lhs = hermitian_norm(sign > 0 ? parts.real_part : parts.imag_part);
    const RadiusRange w = ctx.radius();
    return detail::build_bound(sign > 0 ? "LEM1+" : "LEM1-", lhs, w.lo, w.hi, lhs);
}

/// [S/4, (||A+A*||^2 + ||A-A*||^2)/8, w^2]
inline ChainReport eval_chain_T1(MatrixContext& ctx) {
    const double s = ctx.square_sum_norm();
    const Cartesian& parts = ctx.cartesian();
    const double b = hermitian_norm(parts.real_part);
    const double c = hermitian_norm(parts.imag_part);
    const double middle = 0.5 * (b * b + c * c);
    const RadiusRange w = ctx.radius();
    return detail::build_chain("T1", {0.25 * s, middle, w.lo * w.lo}, {0.25 * s, middle, w.hi * w.hi});
}

/// [S/4, sqrt(2 w^4 + w((A*-A)^2 (A*+A)^2)/8)/2, w^2], plus the identity
/// w(C^2 B^2) = w((A*-A)^2 (A*+A)^2)/16 as a check.
inline ChainReport eval_chain_T2(MatrixContext& ctx) {
    const Matrix& a = ctx.matrix();
    const Matrix adj = a.adjoint();
    const Matrix minus = adj - a;
    const Matrix plus = adj + a;
    const Matrix product = (minus * minus) * (plus * plus);
    const RadiusRange wp = ctx.radius_of(product);

    const double s = ctx.square_sum_norm();
    const RadiusRange w = ctx.radius();
    auto middle = [](double wa, double wprod) {
        return 0.5 * std::sqrt(2.0 * detail::pow4(wa) + 0.125 * wprod);
    };
    ChainReport chain = detail::build_chain("T2", {0.25 * s, middle(w.lo, wp.lo), w.lo * w.lo},
                                            {0.25 * s, middle(w.hi, wp.hi), w.hi * w.hi});

    const Cartesian& parts = ctx.cartesian();
    const Matrix& b = parts.real_part;
    const Matrix& c = parts.imag_part;
    const RadiusRange wcb = ctx.radius_of((c * c) * (b * b));
    const double extra = std::max(wcb.hi - wcb.lo, (wp.hi - wp.lo) / 16.0);
    chain.checks.push_back(detail::equality_check("P-CB", wcb.lo, wp.lo / 16.0, extra,
                                                  std::max(wcb.hi, wp.hi / 16.0)));
    return chain;
}

namespace detail {

/// m(D^2) for D = (|A| - |A*|)/2, from the eigenvalues of D.
inline double min_half_difference_square(MatrixContext& ctx) {
    const PolarParts& p = ctx.polar();
    const RealVector ev = herm_eigenvalues(0.5 * (p.abs_left() - p.abs_right()));
    return ev.cwiseAbs2().minCoeff();
}

} // namespace detail

/// w^2 <= ||(|A|^2 + |A*|^2)/2|| - m(((|A| - |A*|)/2)^2)
inline BoundReport eval_bound_T3(MatrixContext& ctx) {
    const double rhs = 0.5 * ctx.square_sum_norm() - detail::min_half_difference_square(ctx);
    const RadiusRange w = ctx.radius();
    return detail::build_bound("T3", w.lo * w.lo, rhs, rhs, w.hi * w.hi);
}

/// w^2 <= (|||A|^2 + |A*|^2|| - m((|A| - |A*|)^2))/2. Violations are expected.
inline BoundReport eval_bound_T3_printed(MatrixContext& ctx) {
    // m((|A| - |A*|)^2) = 4 m(D^2)
    const double rhs = 0.5 * ctx.square_sum_norm() - 2.0 * detail::min_half_difference_square(ctx);
    const RadiusRange w = ctx.radius();
    return detail::build_bound("T3-PRINTED", w.lo * w.lo, rhs, rhs, w.hi * w.hi);
}

/// [f(w), ||g^{-1}((g o f(|A|) + g o f(|A*|))/2)||, ||f(|A|) + f(|A*|)||/2]
inline ChainReport eval_functional_chain(MatrixContext& ctx, const FunctionPair& fp) {
    fp.verify();
    const PolarParts& p = ctx.polar();
    auto gf = [&fp](double x) { return fp.g(fp.f(x)); };
    const Matrix mean = 0.5 * (p.left(gf) + p.right(gf));
    const double middle = hermitian_norm(apply_herm_fn(mean, fp.g_inverse));
    const double right = 0.5 * hermitian_norm(p.left(fp.f) + p.right(fp.f));
    const RadiusRange w = ctx.radius();
    return detail::build_chain("FUNC", {fp.f(w.lo), middle, right}, {fp.f(w.hi), middle, right});
}

/// [w^r, ||X + I - sqrt(2X + I)||/2, |||A|^r + |A*|^r||/2],
/// X = |A|^r + |A*|^r + |A|^{r/2} + |A*|^{r/2}; r >= 2.
/// Also checks the middle term against the functional chain with
/// (f, g) = (x^r, x + sqrt(x)).
inline ChainReport eval_chain_COR(MatrixContext& ctx, double r) {
    if (!(r >= 2.0))
        throw invalid_parameter("eval_chain_COR: exponent r must be >= 2");
    const PolarParts& p = ctx.polar();
    auto full = [r](double x) { return std::pow(x, r); };
    auto half = [r](double x) { return std::pow(x, 0.5 * r); };
    const Matrix powers = p.left(full) + p.right(full);
    const Matrix x = powers + p.left(half) + p.right(half);
    const Matrix id = Matrix::Identity(x.rows(), x.cols());
    const Matrix root = apply_herm_fn(2.0 * x + id, [](double v) { return std::sqrt(v); });
    const double middle = 0.5 * hermitian_norm(x + id - root);
    const double right = 0.5 * hermitian_norm(powers);
    const RadiusRange w = ctx.radius();

    const std::string id_str = "COR(r=" + FunctionPair::format_exponent(r) + ")";
    ChainReport chain =
        detail::build_chain(id_str, {std::pow(w.lo, r), middle, right}, {std::pow(w.hi, r), middle, right});

    const ChainReport functional = eval_functional_chain(ctx, FunctionPair::power_sqrt(r));
    chain.checks.push_back(detail::equality_check("COR=FUNC", middle, functional.terms[1], 0.0,
                                                  std::max(middle, functional.terms[1])));
    return chain;
}

// ---------------------------------------------------------------------------
// two-matrix lemmas

/// ||A + B|| <= sqrt(||A*A + B*B|| + 2 w(B*A))
inline BoundReport eval_lemma_norm_sum(const Matrix& a, const Matrix& b, const RadiusConfig& cfg = {}) {
    require_same_shape(a, b, "eval_lemma_norm_sum");
    require_finite(a, "eval_lemma_norm_sum");
    require_finite(b, "eval_lemma_norm_sum");
    const double lhs = operator_norm(a + b);
    const Matrix gram = symmetrize(a.adjoint() * a + b.adjoint() * b);
    const double gram_norm = herm_eigenvalues(gram).maxCoeff();
    const RadiusEstimate w = numerical_radius(b.adjoint() * a, cfg);
    const double rhs = std::sqrt(std::max(0.0, gram_norm + 2.0 * w.lower));
    const double rhs_hi = std::sqrt(std::max(0.0, gram_norm + 2.0 * w.upper));
    return detail::build_bound("LEM-SUM", lhs, rhs, rhs_hi, rhs_hi);
}

namespace detail {

/// Zeroes eigenvalues in [-tau, 0); throws not_positive below -tau.
inline Matrix clip_psd(const Matrix& h, double tau, const char* which) {
    const HermEigen eig = herm_eigen(h);
    if (eig.eigenvalues(0) < -tau)
        throw not_positive(std::string("eval_lemma_pos_diff: ") + which + " has eigenvalue " +
                           std::to_string(eig.eigenvalues(0)));
    if (eig.eigenvalues(0) >= 0.0)
        return symmetrize(h);
    RealVector values = eig.eigenvalues.cwiseMax(0.0);
    return symmetrize(eig.eigenvectors * values.asDiagonal() * eig.eigenvectors.adjoint());
}

} // namespace detail

/// ||P - Q|| <= max(||P||, ||Q||) - min(m(P), m(Q)) for positive P, Q.
inline BoundReport eval_lemma_pos_diff(const Matrix& p_in, const Matrix& q_in) {
    require_same_shape(p_in, q_in, "eval_lemma_pos_diff");
    require_hermitian(p_in, "eval_lemma_pos_diff");
    require_hermitian(q_in, "eval_lemma_pos_diff");
    const double scale = std::max(hermitian_norm(p_in), hermitian_norm(q_in));
    const double tau = tolerance(scale);
    const Matrix p = detail::clip_psd(p_in, tau, "P");
    const Matrix q = detail::clip_psd(q_in, tau, "Q");

    const RealVector ep = herm_eigenvalues(p);
    const RealVector eq = herm_eigenvalues(q);
    const double lhs = hermitian_norm(p - q);
    const double rhs = std::max(ep.maxCoeff(), eq.maxCoeff()) - std::min(ep.minCoeff(), eq.minCoeff());
    return detail::build_bound("LEM-POSDIFF", lhs, rhs, rhs, rhs);
}

// ---------------------------------------------------------------------------
// matrix-level entry points

inline ChainReport eval_chain_B0(const Matrix& a, const RadiusConfig& cfg = {}) {
    MatrixContext ctx(a, cfg);
    return eval_chain_B0(ctx);
}
inline BoundReport eval_bound_KIT(const Matrix& a, const RadiusConfig& cfg = {}) {
    MatrixContext ctx(a, cfg);
    return eval_bound_KIT(ctx);
}
inline ChainReport eval_chain_SQ(const Matrix& a, const RadiusConfig& cfg = {}) {
    MatrixContext ctx(a, cfg);
    return eval_chain_SQ(ctx);
}
inline BoundReport eval_bound_LEM1(const Matrix& a, int sign, const RadiusConfig& cfg = {}) {
    MatrixContext ctx(a, cfg);
    return eval_bound_LEM1(ctx, sign);
}
inline ChainReport eval_chain_T1(const Matrix& a, const RadiusConfig& cfg = {}) {
    MatrixContext ctx(a, cfg);
    return eval_chain_T1(ctx);
}
inline ChainReport eval_chain_T2(const Matrix& a, const RadiusConfig& cfg = {}) {
    MatrixContext ctx(a, cfg);
    return eval_chain_T2(ctx);
}
inline BoundReport eval_bound_T3(const Matrix& a, const RadiusConfig& cfg = {}) {
    MatrixContext ctx(a, cfg);
    return eval_bound_T3(ctx);
}
inline BoundReport eval_bound_T3_printed(const Matrix& a, const RadiusConfig& cfg = {}) {
    MatrixContext ctx(a, cfg);
    return eval_bound_T3_printed(ctx);
}
inline ChainReport eval_functional_chain(const Matrix& a, const FunctionPair& fp, const RadiusConfig& cfg = {}) {
    MatrixContext ctx(a, cfg);
    return eval_functional_chain(ctx, fp);
}
inline ChainReport eval_chain_COR(const Matrix& a, double r, const RadiusConfig& cfg = {}) {
    MatrixContext ctx(a, cfg);
    return eval_chain_COR(ctx, r);
}

// ---------------------------------------------------------------------------
// dispatch by id

struct EvalOptions {
    double cor_exponent = 2.0;
    FunctionPair function_pair = FunctionPair::power_sqrt(2.0);
};

/// A single bound as a one-link chain with terms [lhs, rhs].
inline ChainReport as_chain(const BoundReport& b) {
    ChainReport c;
    c.chain_id = b.bound_id;
    c.terms = {b.lhs, b.rhs};
    c.links = {b};
    return c;
}

/// Evaluates one arity-1 registry entry. Arity-2 lemmas need
/// eval_lemma_norm_sum / eval_lemma_pos_diff directly.
inline ChainReport evaluate(std::string_view id, MatrixContext& ctx, const EvalOptions& opts = {}) {
    const BoundInfo& info = catalog_lookup(id);
    if (info.arity != 1)
        throw invalid_parameter("bound '" + info.id + "' takes two operands");
    if (id == "B0")
        return eval_chain_B0(ctx);
    if (id == "KIT")
        return as_chain(eval_bound_KIT(ctx));
    if (id == "SQ")
        return eval_chain_SQ(ctx);
    if (id == "LEM1+")
        return as_chain(eval_bound_LEM1(ctx, +1));
    if (id == "LEM1-")
        return as_chain(eval_bound_LEM1(ctx, -1));
    if (id == "T1")
        return eval_chain_T1(ctx);
    if (id == "T2")
        return eval_chain_T2(ctx);
    if (id == "T3")
        return as_chain(eval_bound_T3(ctx));
    if (id == "T3-PRINTED")
        return as_chain(eval_bound_T3_printed(ctx));
    if (id == "FUNC")
        return eval_functional_chain(ctx, opts.function_pair);
    return eval_chain_COR(ctx, opts.cor_exponent);
}

} // namespace nrad

#endif // NRAD_BOUNDS_HPP
