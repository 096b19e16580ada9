#ifndef NRAD_ENSEMBLE_HPP
#define NRAD_ENSEMBLE_HPP

// Seeded random matrix ensembles and catalog-wide studies over them.
//
// Matrix k of a study is drawn from PCG stream k of the study seed, so any
// single draw is reproducible from (family, dimension, seed, k) alone. The
// partner operand for two-matrix lemmas comes from stream k | 2^62.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "nrad/bounds.hpp"
#include "nrad/errors.hpp"
#include "nrad/io.hpp"
#include "nrad/linalg.hpp"
#include "nrad/radius.hpp"
#include "nrad/random.hpp"

namespace nrad {

enum class Family { ginibre, gue, nilpotent, normal, real_gaussian, rank1, hermitian_psd };

inline constexpr Family all_families[] = {Family::ginibre, Family::gue,   Family::nilpotent,
                                          Family::normal,  Family::real_gaussian, Family::rank1,
                                          Family::hermitian_psd};

inline std::string_view family_name(Family f) {
    switch (f) {
    case Family::ginibre: return "ginibre";
    case Family::gue: return "gue";
    case Family::nilpotent: return "nilpotent-shift-random";
    case Family::normal: return "normal";
    case Family::real_gaussian: return "real-gaussian";
    case Family::rank1: return "rank1";
    case Family::hermitian_psd: return "hermitian-psd";
    }
    return "?";
}

/// Accepts the canonical names plus "nilpotent" as shorthand.
inline Family parse_family(std::string_view name) {
    if (name == "nilpotent")
        return Family::nilpotent;
    for (Family f : all_families)
        if (family_name(f) == name)
            return f;
    std::string valid;
    for (Family f : all_families)
        valid += (valid.empty() ? "" : ", ") + std::string(family_name(f));
    throw invalid_parameter("unknown family '" + std::string(name) + "'; valid families: " + valid);
}

struct EnsembleSpec {
    Family family = Family::ginibre;
    int dimension = 2;
    std::size_t count = 1;
    std::uint64_t seed = 0;

    void validate() const {
        if (dimension < 1 || dimension > 512)
            throw invalid_parameter("dimension must be in [1, 512]");
        if (count < 1 || count > 1'000'000)
            throw invalid_parameter("count must be in [1, 1e6]");
    }
};

namespace detail {

inline constexpr std::uint64_t partner_stream_bit = std::uint64_t{1} << 62;

inline Matrix draw(Family family, Eigen::Index n, gaussian_source& src) {
    switch (family) {
    case Family::ginibre:
        return src.ginibre(n);
    case Family::gue:
        return symmetrize(src.ginibre(n));
    case Family::nilpotent: {
        Matrix g = src.ginibre(n);
        return g.triangularView<Eigen::StrictlyUpper>();
    }
    case Family::normal: {
        const Matrix u = src.unitary(n);
        Vector d(n);
        for (Eigen::Index i = 0; i < n; ++i)
            d(i) = src.cplx();
        return u * d.asDiagonal() * u.adjoint();
    }
    case Family::real_gaussian: {
        Matrix g(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
                g(i, j) = complex(src.real(), 0.0);
        return g;
    }
    case Family::rank1: {
        const Vector u = src.unit_vector(n);
        const Vector v = src.unit_vector(n);
        return u * v.adjoint();
    }
    case Family::hermitian_psd: {
        const Matrix g = src.ginibre(n);
        return symmetrize(g.adjoint() * g);
    }
    }
    throw invalid_parameter("unknown family");
}

} // namespace detail

/// Draw `index` of the ensemble; deterministic in (family, dimension, seed, index).
inline Matrix generate(const EnsembleSpec& spec, std::size_t index) {
    spec.validate();
    if (index >= spec.count)
        throw invalid_parameter("generate: index " + std::to_string(index) + " out of range [0, " +
                                std::to_string(spec.count) + ")");
    gaussian_source src(spec.seed, index);
    return detail::draw(spec.family, spec.dimension, src);
}

/// Second operand for the two-matrix lemmas, from an independent stream.
inline Matrix generate_partner(const EnsembleSpec& spec, std::size_t index) {
    spec.validate();
    if (index >= spec.count)
        throw invalid_parameter("generate_partner: index out of range");
    gaussian_source src(spec.seed, index | detail::partner_stream_bit);
    return detail::draw(spec.family, spec.dimension, src);
}

// ---------------------------------------------------------------------------
// studies

struct StudyRow {
    std::size_t index = 0;
    std::string bound_id;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool violated = false;
};

struct Violation {
    std::size_t index;
    std::string bound_id;
    double lhs;
    double rhs;
};

struct SlackStats {
    double min = 0.0;
    double median = 0.0;
    double max = 0.0;
};

struct StudyFailure {
    std::size_t index;
    std::string bound_id;
    std::string message;
};

struct StudyReport {
    EnsembleSpec spec;
    std::vector<std::string> bound_ids;
    std::vector<Violation> violations;
    std::map<std::string, SlackStats> slack_stats;
    std::map<std::string, double> tight_fraction;
    std::vector<StudyFailure> failures;
    double elapsed_seconds = 0.0;
    std::vector<std::uint64_t> seeds_used;

    /// Violations of any row except the T3-PRINTED diagnostic.
    std::size_t blocking_violations() const {
        return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(), [](const Violation& v) {
            return !is_diagnostic(v.bound_id);
        }));
    }

    static bool is_diagnostic(std::string_view row_id) { return row_id.rfind("T3-PRINTED", 0) == 0; }
};

struct StudyOptions {
    std::vector<double> cor_exponents{2.0};
    FunctionPair function_pair = FunctionPair::power_sqrt(2.0);
    std::function<void(const StudyRow&)> on_row;
};

inline constexpr double tight_threshold = 1e-6;

/// The rows a chain contributes: its worst link under the chain id, plus one
/// row per identity check under "<chain>/<check>".
inline std::vector<StudyRow> study_rows(std::size_t index, const ChainReport& chain) {
    std::vector<StudyRow> rows;
    const BoundReport& w = chain.worst_link();
    rows.push_back({index, chain.chain_id, w.lhs, w.rhs, w.slack, chain.violated()});
    for (const BoundReport& c : chain.checks)
        rows.push_back({index, chain.chain_id + "/" + c.bound_id, c.lhs, c.rhs, c.slack, c.violated});
    return rows;
}

inline StudyReport run_study(const EnsembleSpec& spec, const std::vector<std::string>& bound_ids,
                             const RadiusConfig& cfg = {}, const StudyOptions& opts = {}) {
    spec.validate();
    cfg.validate();
    for (const std::string& id : bound_ids)
        catalog_lookup(id);
    for (double r : opts.cor_exponents)
        if (!(r >= 2.0))
            throw invalid_parameter("COR exponent must be >= 2");

    const auto start = std::chrono::steady_clock::now();
    StudyReport report;
    report.spec = spec;
    report.bound_ids = bound_ids;
    report.seeds_used = {spec.seed};
    std::map<std::string, std::vector<double>> relative;

    auto record = [&](const StudyRow& row) {
        relative[row.bound_id].push_back(row.slack / std::max(1.0, std::abs(row.rhs)));
        if (row.violated)
            report.violations.push_back({row.index, row.bound_id, row.lhs, row.rhs});
        if (opts.on_row)
            opts.on_row(row);
    };

    for (std::size_t index = 0; index < spec.count; ++index) {
        const Matrix a = generate(spec, index);
        MatrixContext ctx(a, cfg);
        std::optional<Matrix> partner;
        for (const std::string& id : bound_ids) {
            try {
                const BoundInfo& info = catalog_lookup(id);
                if (info.arity == 2) {
                    if (!partner)
                        partner = generate_partner(spec, index);
                    const BoundReport b = id == "LEM-SUM"
                                              ? eval_lemma_norm_sum(a, *partner, cfg)
                                              : eval_lemma_pos_diff(ctx.polar().abs_left(),
                                                                    PolarParts(*partner).abs_left());
                    record({index, b.bound_id, b.lhs, b.rhs, b.slack, b.violated});
                } else if (id == "COR") {
                    for (double r : opts.cor_exponents)
                        for (const StudyRow& row : study_rows(index, eval_chain_COR(ctx, r)))
                            record(row);
                } else {
                    EvalOptions eo;
                    eo.function_pair = opts.function_pair;
                    for (const StudyRow& row : study_rows(index, evaluate(id, ctx, eo)))
                        record(row);
                }
            } catch (const error& e) {
                report.failures.push_back({index, id, e.what()});
            }
        }
    }

    for (auto& [key, values] : relative) {
        std::vector<double> v = values;
        const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
        std::nth_element(v.begin(), mid, v.end());
        SlackStats s;
        s.median = *mid;
        s.min = *std::min_element(values.begin(), values.end());
        s.max = *std::max_element(values.begin(), values.end());
        report.slack_stats[key] = s;
        const auto tight = std::count_if(values.begin(), values.end(), [](double x) { return x < tight_threshold; });
        report.tight_fraction[key] = static_cast<double>(tight) / static_cast<double>(values.size());
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

// ---------------------------------------------------------------------------
// serialization

inline void write_csv_header(std::ostream& out) { out << "index,bound_id,lhs,rhs,slack,violated\n"; }

inline void write_csv_row(std::ostream& out, const StudyRow& row) {
    out << row.index << ',' << row.bound_id << ',' << format_full(row.lhs) << ',' << format_full(row.rhs) << ','
        << format_full(row.slack) << ',' << (row.violated ? "true" : "false") << '\n';
}

inline nlohmann::json to_json(const StudyReport& r) {
    nlohmann::json j;
    j["spec"] = {{"family", std::string(family_name(r.spec.family))},
                 {"dimension", r.spec.dimension},
                 {"count", r.spec.count},
                 {"seed", r.spec.seed}};
    j["bound_ids"] = r.bound_ids;
    j["violations"] = nlohmann::json::array();
    for (const Violation& v : r.violations)
        j["violations"].push_back({{"matrix_index", v.index}, {"bound_id", v.bound_id}, {"lhs", v.lhs}, {"rhs", v.rhs}});
    j["slack_stats"] = nlohmann::json::object();
    for (const auto& [id, s] : r.slack_stats)
        j["slack_stats"][id] = {{"min", s.min}, {"median", s.median}, {"max", s.max}};
    j["tight_fraction"] = r.tight_fraction;
    j["failures"] = nlohmann::json::array();
    for (const StudyFailure& f : r.failures)
        j["failures"].push_back({{"matrix_index", f.index}, {"bound_id", f.bound_id}, {"message", f.message}});
    j["elapsed_seconds"] = r.elapsed_seconds;
    j["seeds_used"] = r.seeds_used;
    return j;
}

// ---------------------------------------------------------------------------
// which refinement is sharpest for one matrix

struct TightnessRecord {
    double omega_squared = 0.0;
    // lower refinements of w^2
    double b0_lower = 0.0; // (||A||/2)^2
    double t1_middle = 0.0;
    double t2_middle = 0.0;
    double sq_lower = 0.0;
    // upper refinements of w^2
    double sq_upper = 0.0;
    double t3_rhs = 0.0;
    double kit_rhs_squared = 0.0;
    std::string sharpest_lower;
    std::string sharpest_upper;
};

inline TightnessRecord tightness_compare(const Matrix& a, const RadiusConfig& cfg = {}) {
    MatrixContext ctx(a, cfg);
    TightnessRecord t;
    const double w = ctx.radius().lo;
    t.omega_squared = w * w;
    const ChainReport b0 = eval_chain_B0(ctx);
    const ChainReport t1 = eval_chain_T1(ctx);
    const ChainReport t2 = eval_chain_T2(ctx);
    const ChainReport sq = eval_chain_SQ(ctx);
    t.b0_lower = b0.terms[0] * b0.terms[0];
    t.t1_middle = t1.terms[1];
    t.t2_middle = t2.terms[1];
    t.sq_lower = sq.terms[0];
    t.sq_upper = sq.terms[2];
    t.t3_rhs = eval_bound_T3(ctx).rhs;
    const double kit = eval_bound_KIT(ctx).rhs;
    t.kit_rhs_squared = kit * kit;

    const std::pair<const char*, double> lowers[] = {
        {"B0", t.b0_lower}, {"SQ", t.sq_lower}, {"T1", t.t1_middle}, {"T2", t.t2_middle}};
    const std::pair<const char*, double> uppers[] = {
        {"SQ", t.sq_upper}, {"KIT", t.kit_rhs_squared}, {"T3", t.t3_rhs}};
    t.sharpest_lower = std::max_element(std::begin(lowers), std::end(lowers), [](auto& x, auto& y) {
                           return x.second < y.second;
                       })->first;
    t.sharpest_upper = std::min_element(std::begin(uppers), std::end(uppers), [](auto& x, auto& y) {
                           return x.second < y.second;
                       })->first;
    return t;
}

} // namespace nrad

#endif // NRAD_ENSEMBLE_HPP
