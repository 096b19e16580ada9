// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "nrad/nrad.hpp"

using nrad::Matrix;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& body) {
    const auto t0 = clock_type::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass)
        ++failures;
    std::printf("%s %2d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

Matrix jordan() {
    Matrix j = Matrix::Zero(2, 2);
    j(0, 1) = 1.0;
    return j;
}

nrad::RadiusConfig coarse() {
    nrad::RadiusConfig cfg;
    cfg.grid_points = 64;
    return cfg;
}

nrad::EnsembleSpec spec(nrad::Family f, int n, std::size_t count, std::uint64_t seed) {
    nrad::EnsembleSpec s;
    s.family = f;
    s.dimension = n;
    s.count = count;
    s.seed = seed;
    return s;
}

bool near(const std::vector<double>& got, const std::vector<double>& want, double tol, double& worst) {
    bool ok = got.size() == want.size();
    for (std::size_t k = 0; ok && k < got.size(); ++k) {
        worst = std::max(worst, std::abs(got[k] - want[k]));
        ok = std::abs(got[k] - want[k]) <= tol;
    }
    return ok;
}

Outcome jordan_tightness() {
    const auto t0 = clock_type::now();
    nrad::MatrixContext ctx(jordan());
    const auto w = ctx.radius();
    const auto sq = nrad::eval_chain_SQ(ctx);
    const auto t1 = nrad::eval_chain_T1(ctx);
    const auto t2 = nrad::eval_chain_T2(ctx);
    const auto t3 = nrad::eval_bound_T3(ctx);
    const double elapsed = seconds_since(t0);

    double worst = std::max(std::abs(w.lo - 0.5), std::abs(w.hi - 0.5));
    bool ok = worst <= 1e-9;
    ok &= near(sq.terms, {0.25, 0.25, 0.5}, 1e-9, worst);
    ok &= near(t1.terms, {0.25, 0.25, 0.25}, 1e-9, worst);
    ok &= near(t2.terms, {0.25, 0.25, 0.25}, 1e-9, worst);
    ok &= near({t3.lhs, t3.rhs}, {0.25, 0.25}, 1e-9, worst);
    ok &= !sq.violated() && !t1.violated() && !t2.violated() && !t3.violated;
    ok &= elapsed < 1.0;
    return {ok, fmt("w in [%.17g, %.17g], max deviation %.3g", w.lo, w.hi, worst) +
                    fmt(", evaluation %.3f s", elapsed)};
}

Outcome misprint() {
    const auto printed = nrad::eval_bound_T3_printed(jordan());
    const auto t3 = nrad::eval_bound_T3(jordan());
    const bool ok = std::abs(printed.lhs - 0.25) <= 1e-9 && std::abs(printed.rhs) <= 1e-9 && printed.violated &&
                    std::abs(t3.lhs - 0.25) <= 1e-9 && std::abs(t3.rhs - 0.25) <= 1e-9 && !t3.violated;
    return {ok, fmt("printed form lhs %.6g rhs %.6g (violated), ", printed.lhs, printed.rhs) +
                    fmt("corrected form lhs %.6g rhs %.6g", t3.lhs, t3.rhs)};
}

Outcome property_suite() {
    const auto t0 = clock_type::now();
    const std::vector<std::string> ids{"B0", "KIT", "SQ", "LEM1+", "LEM1-", "T1", "T2", "T3", "FUNC", "COR"};
    nrad::StudyOptions opts;
    opts.cor_exponents = {2.0, 3.0};
    opts.function_pair = nrad::FunctionPair::power_sqrt(2.0);
    std::size_t violations = 0, failed = 0, matrices = 0;
    std::string first;
    for (nrad::Family f : {nrad::Family::ginibre, nrad::Family::gue, nrad::Family::nilpotent, nrad::Family::normal,
                           nrad::Family::rank1}) {
        for (int n : {2, 3, 5, 8, 13, 20}) {
            const auto r = nrad::run_study(spec(f, n, 1000, 20261019 + static_cast<std::uint64_t>(n)), ids, coarse(),
                                           opts);
            violations += r.violations.size();
            failed += r.failures.size();
            matrices += r.spec.count;
            if (first.empty() && !r.violations.empty())
                first = std::string(nrad::family_name(f)) + " n=" + std::to_string(n) + " " +
                        r.violations.front().bound_id;
            if (first.empty() && !r.failures.empty())
                first = r.failures.front().message;
        }
    }
    const double elapsed = seconds_since(t0);
    std::string detail = fmt("%.0f matrices, %.0f violations, %.0f evaluation failures", double(matrices),
                             double(violations), double(failed)) +
                         fmt(", %.1f s", elapsed);
    if (!first.empty())
        detail += "; first: " + first;
    return {violations == 0 && failed == 0 && elapsed < 600.0, detail};
}

Outcome lemma_suite() {
    std::size_t sum_bad = 0, pos_bad = 0;
    double sum_slack = 1e300, pos_slack = 1e300;
    for (std::size_t i = 0; i < 1000; ++i) {
        const int n = 2 + static_cast<int>(i % 19);
        const auto g = spec(nrad::Family::ginibre, n, 1000, 77);
        const auto b = nrad::eval_lemma_norm_sum(nrad::generate(g, i), nrad::generate_partner(g, i), coarse());
        sum_bad += b.violated;
        sum_slack = std::min(sum_slack, b.relative_slack());
        const auto p = spec(nrad::Family::hermitian_psd, n, 1000, 78);
        const auto d = nrad::eval_lemma_pos_diff(nrad::generate(p, i), nrad::generate_partner(p, i));
        pos_bad += d.violated;
        pos_slack = std::min(pos_slack, d.relative_slack());
    }
    return {sum_bad == 0 && pos_bad == 0,
            fmt("norm-sum violations %.0f (min rel slack %.3g), ", double(sum_bad), sum_slack) +
                fmt("positive-difference violations %.0f (min rel slack %.3g)", double(pos_bad), pos_slack)};
}

Outcome estimator_certification() {
    double worst_excess = -1e300, worst_width_ratio = 0.0;
    std::size_t oracle_bad = 0, width_bad = 0;
    for (std::size_t i = 0; i < 200; ++i) {
        const int n = 1 + static_cast<int>(i % 20);
        const Matrix a = nrad::generate(spec(nrad::Family::ginibre, n, 200, 5150), i);
        const auto e = nrad::numerical_radius(a);
        const double oracle = nrad::radius_sample_oracle(a, 100000, 900 + i);
        worst_excess = std::max(worst_excess, oracle - e.upper);
        oracle_bad += oracle > e.upper + 1e-9;
        const double limit = 1e-9 * std::max(1.0, nrad::operator_norm(a));
        worst_width_ratio = std::max(worst_width_ratio, e.width() / limit);
        width_bad += e.width() > limit;
    }
    Matrix shift = Matrix::Zero(3, 3);
    shift(0, 1) = shift(1, 2) = 1.0;
    const auto s = nrad::numerical_radius(shift);
    const double target = std::cos(std::numbers::pi / 4);
    const bool shift_ok = std::abs(s.lower - target) <= 1e-9 && std::abs(s.upper - target) <= 1e-9;
    return {oracle_bad == 0 && width_bad == 0 && shift_ok,
            fmt("max(oracle - upper) %.3g, max width/limit %.3g, ", worst_excess, worst_width_ratio) +
                fmt("3x3 shift [%.17g, %.17g]", s.lower, s.upper)};
}

Outcome hermitian_comparison() {
    double worst = 0.0;
    for (std::size_t i = 0; i < 100; ++i) {
        const int n = 1 + static_cast<int>(i % 20);
        const Matrix h = nrad::generate(spec(nrad::Family::gue, n, 100, 25), i);
        nrad::MatrixContext ctx(h, coarse());
        const double n2 = std::pow(ctx.norm(), 2);
        const double t2 = nrad::eval_chain_T2(ctx).terms[1];
        const double t1 = nrad::eval_chain_T1(ctx).terms[1];
        worst = std::max({worst, std::abs(t2 - std::sqrt(0.5) * n2) / n2, std::abs(t1 - 0.5 * n2) / n2});
    }
    return {worst <= 1e-9, fmt("max deviation / ||A||^2 = %.3g", worst)};
}

Outcome cartesian_identity() {
    std::size_t bad = 0;
    double worst = 0.0;
    for (std::size_t i = 0; i < 1000; ++i) {
        const int n = 2 + static_cast<int>(i % 19);
        const auto c = nrad::eval_chain_T2(nrad::generate(spec(nrad::Family::ginibre, n, 1000, 31), i), coarse());
        const auto& chk = c.checks.at(0);
        bad += chk.violated;
        worst = std::max(worst, chk.lhs / chk.tolerance_used);
    }
    return {bad == 0, fmt("%.0f failures, max |difference| / tolerance = %.3g", double(bad), worst)};
}

Outcome power_inequality() {
    std::size_t bad = 0;
    double worst = -1e300;
    for (std::size_t i = 0; i < 500; ++i) {
        const int n = 2 + static_cast<int>(i % 19);
        const Matrix a = nrad::generate(spec(nrad::Family::ginibre, n, 500, 41), i);
        const auto w = nrad::numerical_radius(a, coarse());
        Matrix p = a;
        for (int k = 2; k <= 4; ++k) {
            p = p * a;
            const double lhs = nrad::numerical_radius(p, coarse()).lower;
            const double rhs = std::pow(w.upper, k);
            const double tau = nrad::tolerance(rhs);
            worst = std::max(worst, (lhs - rhs) / std::max(1.0, rhs));
            bad += lhs > rhs + tau;
        }
    }
    return {bad == 0, fmt("%.0f violations, max (lhs - rhs)/max(1, rhs) = %.3g", double(bad), worst)};
}

Outcome corollary_closed_form() {
    const double golden = 0.5 * (3.0 - std::sqrt(5.0));
    nrad::MatrixContext ctx(jordan());
    const double func = nrad::eval_functional_chain(ctx, nrad::FunctionPair::power_sqrt(2)).terms[1];
    const double cor = nrad::eval_chain_COR(ctx, 2).terms[1];
    const bool closed = std::abs(func - golden) <= 1e-9 && std::abs(cor - golden) <= 1e-9;
    double worst = 0.0;
    for (std::size_t i = 0; i < 100; ++i) {
        const int dims[] = {2, 3, 5, 8};
        const Matrix a = nrad::generate(spec(nrad::Family::ginibre, dims[i % 4], 100, 9), i);
        nrad::MatrixContext c(a, coarse());
        const double f = nrad::eval_functional_chain(c, nrad::FunctionPair::power_sqrt(2)).terms[1];
        const double r = nrad::eval_chain_COR(c, 2).terms[1];
        worst = std::max(worst, std::abs(f - r));
    }
    return {closed && worst <= 1e-12,
            fmt("J: functional %.17g, corollary %.17g, ", func, cor) + fmt("max |FUNC - COR| = %.3g", worst)};
}

std::string study_csv() {
    std::vector<std::string> ids;
    for (const auto& b : nrad::catalog_list())
        ids.push_back(b.id);
    nrad::StudyOptions opts;
    opts.cor_exponents = {2.0, 3.0};
    std::ostringstream out;
    nrad::write_csv_header(out);
    opts.on_row = [&out](const nrad::StudyRow& r) { nrad::write_csv_row(out, r); };
    nrad::run_study(spec(nrad::Family::ginibre, 5, 200, 424242), ids, coarse(), opts);
    return out.str();
}

Outcome determinism() {
    const std::string a = study_csv();
    const std::string b = study_csv();
    return {a == b && !a.empty(), fmt("%.0f bytes, identical: ", double(a.size())) + (a == b ? "yes" : "no")};
}

} // namespace

int main() {
    report(1, "Jordan-block tightness", jordan_tightness);
    report(2, "Misprint demonstration", misprint);
    report(3, "Property suite", property_suite);
    report(4, "Lemma suite", lemma_suite);
    report(5, "Estimator certification", estimator_certification);
    report(6, "Hermitian comparison of T1/T2", hermitian_comparison);
    report(7, "Cartesian product identity", cartesian_identity);
    report(8, "Power inequality", power_inequality);
    report(9, "Corollary closed form", corollary_closed_form);
    report(10, "Determinism", determinism);
    return failures == 0 ? 0 : 1;
}
