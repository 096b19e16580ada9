#ifndef NRAD_TOOLS_CLI_HPP
#define NRAD_TOOLS_CLI_HPP

// Command-line front end: radius, bounds, study, catalog.
//
// Exit codes: 0 success; 1 input/usage error; 2 enclosure not reached
// (radius); 3 a non-diagnostic bound was violated (bounds, study).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nrad/nrad.hpp"

namespace nrad::cli {

enum exit_code : int { ok = 0, input_error = 1, not_reached = 2, violated = 3 };

struct CliConfig {
    std::string input_path;
    std::string format = "auto";
    std::string output = "human";
    std::string out_path;
    std::size_t grid_points = 1024;
    std::optional<double> target_width;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::string bound_ids = "all";
    std::vector<double> exponents{2.0};
    std::string family;
    int dimension = 0;
    std::size_t count = 0;

    RadiusConfig radius_config() const {
        RadiusConfig cfg;
        cfg.grid_points = grid_points;
        cfg.target_width = target_width;
        cfg.seed = seed;
        cfg.oracle_samples = samples;
        return cfg;
    }

    MatrixFormat matrix_format() const {
        if (format == "matrixmarket")
            return MatrixFormat::matrix_market;
        if (format == "json")
            return MatrixFormat::json;
        return MatrixFormat::automatic;
    }
};

/// Six significant digits for human output.
inline std::string human(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

inline std::vector<std::string> split_ids(const std::string& list) {
    std::vector<std::string> ids;
    if (list == "all") {
        for (const BoundInfo& info : catalog_list())
            ids.push_back(info.id);
        return ids;
    }
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos)
            continue;
        ids.push_back(item.substr(b, e - b + 1));
    }
    for (const std::string& id : ids)
        catalog_lookup(id);
    return ids;
}

inline Matrix load_square(const CliConfig& c) {
    Matrix m = read_matrix(c.input_path, c.matrix_format());
    require_square(m, "input");
    return m;
}

inline nlohmann::json estimate_json(const RadiusEstimate& e) {
    nlohmann::json j = {{"lower", e.lower},
                        {"upper", e.upper},
                        {"theta_star", e.theta_star},
                        {"grid_points", e.grid_points},
                        {"refinement_iters", e.refinement_iters},
                        {"evaluations", e.evaluations},
                        {"seed", e.seed}};
    if (e.oracle)
        j["oracle"] = *e.oracle;
    return j;
}

inline void print_estimate(const CliConfig& c, const RadiusEstimate& e, std::ostream& out) {
    if (c.output == "json") {
        out << estimate_json(e).dump(2) << '\n';
        return;
    }
    out << "omega        " << human(e.lower) << '\n'
        << "lower        " << format_full(e.lower) << '\n'
        << "upper        " << format_full(e.upper) << '\n'
        << "theta_star   " << human(e.theta_star) << '\n'
        << "grid_points  " << e.grid_points << '\n';
    if (e.oracle)
        out << "oracle       " << human(*e.oracle) << '\n';
}

inline int cmd_radius(const CliConfig& c, std::ostream& out, std::ostream& err) {
    Matrix a;
    try {
        a = load_square(c);
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
    try {
        print_estimate(c, numerical_radius(a, c.radius_config()), out);
        return ok;
    } catch (const enclosure_not_reached& e) {
        print_estimate(c, e.best(), out);
        err << "warning: " << e.what() << '\n';
        return not_reached;
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
}

inline const char* status_of(const BoundReport& b) {
    if (b.violated)
        return "VIOLATED";
    return b.relative_slack() < tight_threshold ? "TIGHT" : "OK";
}

inline nlohmann::json bound_json(const BoundReport& b) {
    return {{"bound_id", b.bound_id}, {"lhs", b.lhs},           {"rhs", b.rhs},
            {"slack", b.slack},       {"violated", b.violated}, {"tolerance_used", b.tolerance_used}};
}

inline int cmd_bounds(const CliConfig& c, std::ostream& out, std::ostream& err) {
    Matrix a;
    std::vector<std::string> ids;
    try {
        ids = split_ids(c.bound_ids);
        a = load_square(c);
        for (double r : c.exponents)
            if (!(r >= 2.0))
                throw invalid_parameter("--r must be >= 2");
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }

    MatrixContext ctx(a, c.radius_config());
    std::vector<ChainReport> reports;
    std::vector<std::string> skipped;
    try {
        for (const std::string& id : ids) {
            const BoundInfo& info = catalog_lookup(id);
            if (info.arity != 1) {
                skipped.push_back(id);
                continue;
            }
            if (id == "COR") {
                for (double r : c.exponents)
                    reports.push_back(eval_chain_COR(ctx, r));
            } else {
                reports.push_back(evaluate(id, ctx));
            }
        }
    } catch (const enclosure_not_reached& e) {
        err << "error: " << e.what() << '\n';
        return not_reached;
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }

    bool blocking = false;
    for (const ChainReport& r : reports)
        if ((r.violated() || r.checks_failed()) && !StudyReport::is_diagnostic(r.chain_id))
            blocking = true;

    if (c.output == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const ChainReport& r : reports) {
            nlohmann::json links = nlohmann::json::array();
            for (const BoundReport& b : r.links)
                links.push_back(bound_json(b));
            nlohmann::json checks = nlohmann::json::array();
            for (const BoundReport& b : r.checks)
                checks.push_back(bound_json(b));
            j.push_back({{"chain_id", r.chain_id}, {"terms", r.terms}, {"links", links}, {"checks", checks}});
        }
        for (const std::string& id : skipped)
            j.push_back({{"chain_id", id}, {"skipped", "needs two operands"}});
        out << j.dump(2) << '\n';
    } else if (c.output == "csv") {
        write_csv_header(out);
        for (const ChainReport& r : reports)
            for (const StudyRow& row : study_rows(0, r))
                write_csv_row(out, row);
    } else {
        char line[160];
        std::snprintf(line, sizeof line, "%-12s %14s %14s %14s  %s\n", "bound", "lhs", "rhs", "slack", "status");
        out << line;
        for (const ChainReport& r : reports) {
            const BoundReport& w = r.worst_link();
            const bool any_tight = std::any_of(r.links.begin(), r.links.end(), [](const BoundReport& b) {
                return !b.violated && b.relative_slack() < tight_threshold;
            });
            const char* status = r.violated() ? "VIOLATED" : (any_tight ? "TIGHT" : "OK");
            std::snprintf(line, sizeof line, "%-12s %14s %14s %14s  %s\n", r.chain_id.c_str(), human(w.lhs).c_str(),
                          human(w.rhs).c_str(), human(w.slack).c_str(), status);
            out << line;
            for (const BoundReport& chk : r.checks) {
                std::snprintf(line, sizeof line, "  check %-20s |diff| %s  %s\n", chk.bound_id.c_str(),
                              human(chk.lhs).c_str(), chk.violated ? "FAILED" : "ok");
                out << line;
            }
        }
        for (const std::string& id : skipped) {
            std::snprintf(line, sizeof line, "%-12s %14s %14s %14s  %s\n", id.c_str(), "-", "-", "-",
                          "SKIPPED (two operands)");
            out << line;
        }
    }
    return blocking ? violated : ok;
}

inline int cmd_study(const CliConfig& c, std::ostream& out, std::ostream& err) {
    EnsembleSpec spec;
    std::vector<std::string> ids;
    try {
        spec.family = parse_family(c.family);
        spec.dimension = c.dimension;
        spec.count = c.count;
        spec.seed = c.seed;
        spec.validate();
        ids = split_ids(c.bound_ids);
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }

    std::ofstream file;
    if (!c.out_path.empty()) {
        file.open(c.out_path);
        if (!file) {
            err << "error: cannot write '" << c.out_path << "'\n";
            return input_error;
        }
    }
    std::ostream& sink = c.out_path.empty() ? out : file;

    StudyOptions opts;
    opts.cor_exponents = c.exponents;
    if (c.output == "csv") {
        write_csv_header(sink);
        opts.on_row = [&sink](const StudyRow& row) { write_csv_row(sink, row); };
    }

    StudyReport report;
    try {
        RadiusConfig cfg = c.radius_config();
        report = run_study(spec, ids, cfg, opts);
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }

    if (c.output == "json") {
        sink << to_json(report).dump(2) << '\n';
    } else if (c.output != "csv") {
        char line[200];
        std::snprintf(line, sizeof line, "%-22s %10s %12s %12s %12s %8s\n", "bound", "violations", "min rel", "median",
                      "max rel", "tight");
        sink << line;
        for (const auto& [id, s] : report.slack_stats) {
            const auto v = std::count_if(report.violations.begin(), report.violations.end(),
                                         [&id = id](const Violation& x) { return x.bound_id == id; });
            std::snprintf(line, sizeof line, "%-22s %10ld %12s %12s %12s %8s\n", id.c_str(), static_cast<long>(v),
                          human(s.min).c_str(), human(s.median).c_str(), human(s.max).c_str(),
                          human(report.tight_fraction.at(id)).c_str());
            sink << line;
        }
        sink << "failures: " << report.failures.size() << ", elapsed " << human(report.elapsed_seconds) << " s\n";
    }
    for (const StudyFailure& f : report.failures)
        err << "warning: matrix " << f.index << " bound " << f.bound_id << ": " << f.message << '\n';
    return report.blocking_violations() > 0 ? violated : ok;
}

inline int cmd_catalog(const CliConfig& c, std::ostream& out) {
    if (c.output == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const BoundInfo& info : catalog_list())
            j.push_back({{"id", info.id}, {"description", info.description}, {"arity", info.arity}});
        out << j.dump(2) << '\n';
        return ok;
    }
    for (const BoundInfo& info : catalog_list()) {
        char line[256];
        std::snprintf(line, sizeof line, "%-12s %d  %s  [%s]\n", info.id.c_str(), info.arity,
                      info.description.c_str(), info.source.c_str());
        out << line;
    }
    return ok;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Numerical radius enclosures and inequality checks"};
    app.name("nrad");
    app.require_subcommand(1);
    CliConfig c;
    std::optional<double> width;

    auto add_matrix_flags = [&](CLI::App* sub) {
        sub->add_option("--input", c.input_path, "matrix file (.mtx or .json)")->required();
        sub->add_option("--format", c.format, "matrixmarket, json or auto")
            ->check(CLI::IsMember({"matrixmarket", "json", "auto"}));
    };
    auto add_radius_flags = [&](CLI::App* sub) {
        sub->add_option("--grid", c.grid_points, "initial angle grid size (>= 8)");
        sub->add_option("--width", width, "target enclosure width");
        sub->add_option("--seed", c.seed, "random seed");
        sub->add_option("--samples", c.samples, "random-vector oracle samples (0 = off)");
    };

    CLI::App* radius = app.add_subcommand("radius", "certified enclosure of the numerical radius");
    add_matrix_flags(radius);
    add_radius_flags(radius);
    radius->add_option("--output", c.output, "human or json")->check(CLI::IsMember({"human", "json"}));

    CLI::App* bounds = app.add_subcommand("bounds", "evaluate catalog bounds on a matrix");
    add_matrix_flags(bounds);
    add_radius_flags(bounds);
    bounds->add_option("--bounds", c.bound_ids, "comma-separated bound ids or 'all'");
    bounds->add_option("--r", c.exponents, "corollary exponent(s), r >= 2")->delimiter(',');
    bounds->add_option("--output", c.output, "human, json or csv")->check(CLI::IsMember({"human", "json", "csv"}));

    CLI::App* study = app.add_subcommand("study", "run the catalog over a random ensemble");
    study->add_option("--family", c.family, "ginibre, gue, nilpotent-shift-random, normal, real-gaussian, "
                                            "rank1, hermitian-psd")
        ->required();
    study->add_option("--dim", c.dimension, "matrix dimension")->required();
    study->add_option("--count", c.count, "number of draws")->required();
    add_radius_flags(study);
    study->add_option("--bounds", c.bound_ids, "comma-separated bound ids or 'all'");
    study->add_option("--r", c.exponents, "corollary exponent(s), r >= 2")->delimiter(',');
    study->add_option("--output", c.output, "human, json or csv")->check(CLI::IsMember({"human", "json", "csv"}));
    study->add_option("--out", c.out_path, "write the report here instead of stdout");

    CLI::App* catalog = app.add_subcommand("catalog", "list the bound registry");
    catalog->add_option("--output", c.output, "human or json")->check(CLI::IsMember({"human", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        if (code != 0)
            err << app.help();
        return code == 0 ? ok : input_error;
    }
    c.target_width = width;

    try {
        c.radius_config().validate();
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }

    if (radius->parsed())
        return cmd_radius(c, out, err);
    if (bounds->parsed())
        return cmd_bounds(c, out, err);
    if (study->parsed())
        return cmd_study(c, out, err);
    return cmd_catalog(c, out);
}

} // namespace nrad::cli

#endif // NRAD_TOOLS_CLI_HPP
