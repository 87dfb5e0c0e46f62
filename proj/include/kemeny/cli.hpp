#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "kemeny/braess.hpp"
#include "kemeny/edgelist.hpp"
#include "kemeny/error.hpp"
#include "kemeny/forests.hpp"
#include "kemeny/graph.hpp"
#include "kemeny/kemeny_constant.hpp"
#include "kemeny/rational.hpp"
#include "kemeny/report_io.hpp"
#include "kemeny/verify.hpp"

namespace kemeny {

/// Used whenever --seed is absent, and echoed in seeded output so runs can be
/// reproduced from their reports alone.
inline constexpr std::uint64_t default_seed = 1729;

namespace cli_detail {

inline void deliver(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) fail(ErrorKind::InvalidArgument, "cannot write " + path);
    file << text;
}

inline std::string bool_name(bool b) { return b ? "true" : "false"; }

/// "n m;u v;u v": the edge-list file with ';' for newlines, so it fits one
/// CSV cell or JSON string and can be re-ingested after substitution.
inline std::string canonical_one_line(const Graph& g) {
    std::string s = write_edge_list(g);
    std::replace(s.begin(), s.end(), '\n', ';');
    if (!s.empty() && s.back() == ';') s.pop_back();
    return s;
}

inline std::string csv_cell(const Rational& r) { return decimal_string(r); }

struct AnalyzeOptions {
    std::string input;
    std::string format = "text";
    std::string output;
    bool show_matrices = false;
    std::uint64_t monte_carlo = 0;
    std::uint64_t seed = default_seed;
};

inline std::string run_analyze(const AnalyzeOptions& opt) {
    const ParsedGraph parsed = read_edge_list_file(opt.input);
    const Graph& g = parsed.graph;
    const KemenyValue kv = kemeny_value(g);
    const ForestData fd = forest_data(g);
    const auto twins = find_pendant_twins(g);
    bool identity_labels = true;
    for (std::size_t i = 0; i < parsed.labels.size(); ++i)
        identity_labels = identity_labels && parsed.labels[i] == static_cast<long long>(i);
    std::optional<MonteCarloEstimate> mc;
    if (opt.monte_carlo > 0) mc = estimate_kemeny_monte_carlo(g, opt.monte_carlo, opt.seed);

    if (opt.format == "json") {
        nlohmann::json j{
            {"vertices", g.vertex_count()},
            {"edges", g.edge_count()},
            {"canonical", canonical_one_line(g)},
            {"spanning_trees", fd.tau.str()},
            {"kemeny", rational_json(kv.exact)},
            {"kemeny_spectral", kv.floating},
            {"agreement_gap", kv.agreement_gap},
        };
        j["labels"] = parsed.labels;
        j["degrees"] = nlohmann::json::array();
        for (int v = 0; v < g.vertex_count(); ++v) j["degrees"].push_back(g.degree(v));
        j["pendant_twins"] = nlohmann::json::array();
        for (const auto& t : twins) j["pendant_twins"].push_back({{"a", t.a}, {"b", t.b}, {"common", t.common}});
        if (opt.show_matrices) {
            j["resistance"] = nlohmann::json::array();
            j["two_forest"] = nlohmann::json::array();
            for (std::size_t i = 0; i < fd.omega.rows(); ++i) {
                nlohmann::json orow = nlohmann::json::array();
                nlohmann::json srow = nlohmann::json::array();
                for (std::size_t k = 0; k < fd.omega.cols(); ++k) {
                    orow.push_back(rational_json(fd.omega(i, k)));
                    srow.push_back(fd.s(i, k).str());
                }
                j["resistance"].push_back(orow);
                j["two_forest"].push_back(srow);
            }
        }
        if (mc) j["monte_carlo"] = {{"trials", opt.monte_carlo},
                                    {"seed", opt.seed},
                                    {"mean", mc->mean},
                                    {"standard_error", mc->standard_error}};
        return j.dump(2) + "\n";
    }

    if (opt.format == "csv") {
        std::string s = "key,value\n";
        s += "vertices," + std::to_string(g.vertex_count()) + "\n";
        s += "edges," + std::to_string(g.edge_count()) + "\n";
        s += "canonical," + canonical_one_line(g) + "\n";
        s += "spanning_trees," + fd.tau.str() + "\n";
        s += "kemeny," + csv_cell(kv.exact) + "\n";
        s += "kemeny_spectral," + decimal12(kv.floating) + "\n";
        s += "agreement_gap," + decimal12(kv.agreement_gap) + "\n";
        for (const auto& t : twins)
            s += "pendant_twins," + std::to_string(t.a) + "-" + std::to_string(t.b) + "@" + std::to_string(t.common) + "\n";
        if (opt.show_matrices)
            for (std::size_t i = 0; i < fd.omega.rows(); ++i) {
                std::string orow = "resistance_row_" + std::to_string(i);
                std::string srow = "two_forest_row_" + std::to_string(i);
                for (std::size_t k = 0; k < fd.omega.cols(); ++k) {
                    orow += "," + csv_cell(fd.omega(i, k));
                    srow += "," + fd.s(i, k).str();
                }
                s += orow + "\n" + srow + "\n";
            }
        if (mc)
            s += "monte_carlo_trials," + std::to_string(opt.monte_carlo) + "\nmonte_carlo_seed," +
                 std::to_string(opt.seed) + "\nmonte_carlo_mean," + decimal12(mc->mean) +
                 "\nmonte_carlo_standard_error," + decimal12(mc->standard_error) + "\n";
        return s;
    }

    std::string s;
    s += "vertices: " + std::to_string(g.vertex_count()) + "\n";
    s += "edges: " + std::to_string(g.edge_count()) + " (" + edge_list_string(g) + ")\n";
    if (identity_labels) {
        s += "labels: identity\n";
    } else {
        s += "labels:";
        for (std::size_t i = 0; i < parsed.labels.size(); ++i)
            s += " " + std::to_string(parsed.labels[i]) + "->" + std::to_string(i);
        s += "\n";
    }
    s += "spanning trees: " + fd.tau.str() + "\n";
    s += "kemeny: " + fraction_string(kv.exact) + " (" + decimal_string(kv.exact) + ")\n";
    s += "kemeny spectral: " + decimal12(kv.floating) + "\n";
    s += "agreement gap: " + decimal12(kv.agreement_gap) + "\n";
    if (twins.empty()) {
        s += "pendant twins: none\n";
    } else {
        s += "pendant twins:";
        for (const auto& t : twins)
            s += " (" + std::to_string(t.a) + "," + std::to_string(t.b) + ") at " + std::to_string(t.common);
        s += "\n";
    }
    if (opt.show_matrices) {
        s += "resistance matrix:\n";
        for (std::size_t i = 0; i < fd.omega.rows(); ++i) {
            for (std::size_t k = 0; k < fd.omega.cols(); ++k)
                s += (k ? " " : "  ") + fraction_string(fd.omega(i, k));
            s += "\n";
        }
        s += "2-forest matrix:\n";
        for (std::size_t i = 0; i < fd.s.rows(); ++i) {
            for (std::size_t k = 0; k < fd.s.cols(); ++k) s += (k ? " " : "  ") + fd.s(i, k).str();
            s += "\n";
        }
    }
    if (mc)
        s += "monte carlo: mean " + decimal12(mc->mean) + ", standard error " + decimal12(mc->standard_error) +
             " (" + std::to_string(opt.monte_carlo) + " trials, seed " + std::to_string(opt.seed) + ")\n";
    return s;
}

struct BraessOptions {
    std::string input;
    std::string format = "text";
    std::string output;
    int vertex = -1; // -1 = all vertices
};

inline std::string run_braess(const BraessOptions& opt) {
    const Graph g = read_edge_list_file(opt.input).graph;
    std::vector<BraessVertexRow> rows;
    std::optional<bool> overall;
    if (opt.vertex >= 0) {
        const TwinBraessEvidence e = is_v_twin_braess(g, opt.vertex);
        rows.push_back({opt.vertex, e.lambda, e.kappa_tilde, e.kappa_hat, e.verdict});
    } else {
        BraessReport report = is_twin_braess(g);
        rows = std::move(report.vertices);
        overall = report.twin_braess;
    }

    if (opt.format == "json") {
        nlohmann::json j;
        j["vertices"] = nlohmann::json::array();
        for (const auto& r : rows)
            j["vertices"].push_back({{"vertex", r.vertex},
                                     {"lambda", r.lambda.str()},
                                     {"kappa_tilde", rational_json(r.kappa_tilde)},
                                     {"kappa_hat", rational_json(r.kappa_hat)},
                                     {"verdict", r.verdict}});
        if (overall) j["twin_braess"] = *overall;
        return j.dump(2) + "\n";
    }

    if (opt.format == "csv") {
        std::string s = "vertex,lambda,kappa_tilde,kappa_hat,verdict\n";
        for (const auto& r : rows)
            s += std::to_string(r.vertex) + "," + r.lambda.str() + "," + csv_cell(r.kappa_tilde) + "," +
                 csv_cell(r.kappa_hat) + "," + bool_name(r.verdict) + "\n";
        return s;
    }

    std::string s;
    for (const auto& r : rows)
        s += "vertex " + std::to_string(r.vertex) + ": lambda " + r.lambda.str() + ", kappa_tilde " +
             fraction_string(r.kappa_tilde) + " (" + decimal_string(r.kappa_tilde) + "), kappa_hat " +
             fraction_string(r.kappa_hat) + " (" + decimal_string(r.kappa_hat) + "), " +
             (r.verdict ? "twin-braess" : "not twin-braess") + "\n";
    if (overall) s += std::string("overall: ") + (*overall ? "twin-braess" : "not twin-braess") + "\n";
    return s;
}

struct ParadoxOptions {
    std::string input;
    std::string format = "text";
    std::string output;
};

inline std::string run_paradox(const ParadoxOptions& opt) {
    const Graph g = read_edge_list_file(opt.input).graph;
    const Rational base = kemeny_combinatorial(g);
    const ParadoxScan scan = paradox_scan(g);

    if (opt.format == "json") {
        nlohmann::json j{{"kemeny", rational_json(base)}, {"paradoxical", scan.paradoxical}};
        j["rows"] = nlohmann::json::array();
        for (const auto& r : scan.rows)
            j["rows"].push_back(
                {{"u", r.u}, {"v", r.v}, {"delta", rational_json(r.delta)}, {"paradoxical", r.paradoxical}});
        if (scan.witness) j["witness"] = {scan.witness->first, scan.witness->second};
        if (scan.rows.empty()) j["note"] = "no non-edges";
        return j.dump(2) + "\n";
    }

    if (opt.format == "csv") {
        std::string s;
        if (scan.rows.empty()) s += "# no non-edges\n";
        s += "u,v,delta,paradoxical\n";
        for (const auto& r : scan.rows)
            s += std::to_string(r.u) + "," + std::to_string(r.v) + "," + csv_cell(r.delta) + "," +
                 bool_name(r.paradoxical) + "\n";
        return s;
    }

    std::string s = "kemeny: " + fraction_string(base) + " (" + decimal_string(base) + ")\n";
    if (scan.rows.empty()) s += "no non-edges\n";
    for (const auto& r : scan.rows)
        s += "non-edge " + std::to_string(r.u) + "-" + std::to_string(r.v) + ": delta " + fraction_string(r.delta) +
             " (" + decimal_string(r.delta) + ")" + (r.paradoxical ? " paradoxical" : "") + "\n";
    s += std::string("paradoxical: ") + (scan.paradoxical ? "yes" : "no");
    if (scan.witness)
        s += " (witness " + std::to_string(scan.witness->first) + "-" + std::to_string(scan.witness->second) + ")";
    s += "\n";
    return s;
}

struct VerifyOptions {
    std::string format = "text";
    std::string output;
    int max_n = 5;
};

inline std::pair<std::string, bool> run_verify(const VerifyOptions& opt) {
    const VerificationSummary summary = verify_small_graphs(opt.max_n);
    const auto& c = summary.checks;

    if (opt.format == "json") {
        nlohmann::json j{{"max_n", summary.max_n}, {"failures", summary.failures}, {"ok", summary.ok()}};
        j["graphs_per_n"] = nlohmann::json::array();
        for (const auto& [n, count] : summary.graphs_per_n) j["graphs_per_n"].push_back({{"n", n}, {"count", count}});
        j["checks"] = {{"lambda_positive", c.lambda_positive},
                       {"kappa_increase", c.kappa_increase},
                       {"criterion_equivalence", c.criterion_equivalence},
                       {"forest_oracle", c.forest_oracle},
                       {"tau_identities", c.tau_identities},
                       {"s_tables", c.s_tables},
                       {"inequality", c.inequality},
                       {"total", summary.total_checks()}};
        return {j.dump(2) + "\n", summary.ok()};
    }

    if (opt.format == "csv") {
        std::string s = "key,value\n";
        s += "max_n," + std::to_string(summary.max_n) + "\n";
        for (const auto& [n, count] : summary.graphs_per_n)
            s += "graphs_n" + std::to_string(n) + "," + std::to_string(count) + "\n";
        s += "lambda_positive," + std::to_string(c.lambda_positive) + "\n";
        s += "kappa_increase," + std::to_string(c.kappa_increase) + "\n";
        s += "criterion_equivalence," + std::to_string(c.criterion_equivalence) + "\n";
        s += "forest_oracle," + std::to_string(c.forest_oracle) + "\n";
        s += "tau_identities," + std::to_string(c.tau_identities) + "\n";
        s += "s_tables," + std::to_string(c.s_tables) + "\n";
        s += "inequality," + std::to_string(c.inequality) + "\n";
        s += "total_checks," + std::to_string(summary.total_checks()) + "\n";
        s += "failures," + std::to_string(summary.failures.size()) + "\n";
        return {s, summary.ok()};
    }

    std::string s = "connected graphs up to " + std::to_string(summary.max_n) + " vertices:";
    for (const auto& [n, count] : summary.graphs_per_n) s += " n=" + std::to_string(n) + ":" + std::to_string(count);
    s += "\nchecks: criterion positivity " + std::to_string(c.lambda_positive) + ", constant increase " +
         std::to_string(c.kappa_increase) + ", equivalence " + std::to_string(c.criterion_equivalence) +
         ", 2-forest oracle " + std::to_string(c.forest_oracle) + ", tree-count identities " +
         std::to_string(c.tau_identities) + ", 2-forest tables " + std::to_string(c.s_tables) +
         ", degree-weight inequality " + std::to_string(c.inequality) + " (total " +
         std::to_string(summary.total_checks()) + ")\n";
    s += "failures: " + std::to_string(summary.failures.size()) + "\n";
    for (const auto& f : summary.failures) s += "  " + f + "\n";
    return {s, summary.ok()};
}

struct ExperimentOptions {
    std::string kind;
    std::vector<int> n_values;
    std::uint64_t samples = 100;
    double p = 0.0;
    bool p_given = false;
    std::uint64_t seed = default_seed;
    std::string mode = "sampled";
    bool full_scan = false;
    int max_attempts = 1000;
    std::string format = "csv";
    std::string output;
    std::string detail;
};

inline void run_experiment(const ExperimentOptions& opt, std::ostream& out) {
    const bool collect_details = !opt.detail.empty();
    ExperimentReport report;
    if (opt.kind == "trees") {
        const TreeMode mode = opt.mode == "exhaustive" ? TreeMode::exhaustive : TreeMode::sampled;
        const ParadoxCheck paradox = opt.full_scan ? ParadoxCheck::full_scan : ParadoxCheck::witness_edge;
        report = run_tree_experiment(opt.n_values, opt.samples, opt.seed, mode, paradox, collect_details);
    } else {
        report = run_gnp_experiment(opt.n_values, opt.p, opt.samples, opt.seed, collect_details, opt.max_attempts);
    }
    if (opt.format == "json") {
        deliver(experiment_json(report, collect_details).dump(2) + "\n", opt.output, out);
    } else {
        deliver(experiment_csv(report), opt.output, out);
    }
    if (collect_details) deliver(experiment_json(report, true).dump(2) + "\n", opt.detail, out);
}

} // namespace cli_detail

/// Full command-line driver. args excludes the program name. Returns the
/// process exit status: 0 success, 1 usage or parse error, 2 precondition
/// violation, 3 verification failure.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact random-walk analysis: Kemeny's constant, resistance distances, "
                 "2-forest matrices, twin-pendant criteria, and paradoxical-edge experiments",
                 "kemeny"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "kemeny 1.0.0");

    cli_detail::AnalyzeOptions analyze;
    auto* cmd_analyze = app.add_subcommand("analyze", "Constants, resistances, and pendant twins of one graph");
    cmd_analyze->add_option("--input", analyze.input, "edge-list file")->required()->check(CLI::ExistingFile);
    cmd_analyze->add_option("--format", analyze.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd_analyze->add_option("--output", analyze.output, "write the report here instead of stdout");
    cmd_analyze->add_flag("--show-matrices", analyze.show_matrices, "include resistance and 2-forest matrices");
    cmd_analyze->add_option("--monte-carlo", analyze.monte_carlo, "also simulate this many random-walk trials");
    cmd_analyze->add_option("--seed", analyze.seed, "simulation seed (default 1729)");

    cli_detail::BraessOptions braess;
    auto* cmd_braess = app.add_subcommand("braess", "Twin-pendant criterion per vertex");
    cmd_braess->add_option("--input", braess.input, "edge-list file")->required()->check(CLI::ExistingFile);
    cmd_braess->add_option("--format", braess.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    cmd_braess->add_option("--output", braess.output, "write the report here instead of stdout");
    cmd_braess->add_option("--vertex", braess.vertex, "restrict to one vertex")->check(CLI::NonNegativeNumber);

    cli_detail::ParadoxOptions paradox;
    auto* cmd_paradox = app.add_subcommand("paradox", "Exact constant change for every possible new edge");
    cmd_paradox->add_option("--input", paradox.input, "edge-list file")->required()->check(CLI::ExistingFile);
    cmd_paradox->add_option("--format", paradox.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd_paradox->add_option("--output", paradox.output, "write the report here instead of stdout");

    cli_detail::VerifyOptions verify;
    auto* cmd_verify = app.add_subcommand("verify", "Re-prove the core identities on all small connected graphs");
    cmd_verify->add_option("--max-n", verify.max_n, "largest vertex count, 2..6 (default 5)");
    cmd_verify->add_option("--format", verify.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    cmd_verify->add_option("--output", verify.output, "write the report here instead of stdout");

    cli_detail::ExperimentOptions experiment;
    auto* cmd_experiment = app.add_subcommand("experiment", "Random-ensemble paradox statistics");
    cmd_experiment->add_option("--kind", experiment.kind, "ensemble: trees or gnp")
        ->required()
        ->check(CLI::IsMember({"trees", "gnp"}));
    cmd_experiment->add_option("--n", experiment.n_values, "comma-separated vertex counts")
        ->required()
        ->delimiter(',');
    cmd_experiment->add_option("--samples", experiment.samples, "samples per size (default 100)");
    auto* p_option = cmd_experiment->add_option("--p", experiment.p, "edge probability (gnp only)");
    cmd_experiment->add_option("--seed", experiment.seed, "sampling seed (default 1729)");
    cmd_experiment->add_option("--mode", experiment.mode, "trees only: sampled or exhaustive")
        ->check(CLI::IsMember({"sampled", "exhaustive"}));
    cmd_experiment->add_flag("--full-scan", experiment.full_scan,
                             "trees only: scan all non-edges instead of the twin witness edge");
    cmd_experiment->add_option("--max-attempts", experiment.max_attempts,
                               "gnp only: connectivity rejection budget (default 1000)");
    cmd_experiment->add_option("--format", experiment.format, "output format: csv (default) or json")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd_experiment->add_option("--output", experiment.output, "write the report here instead of stdout");
    cmd_experiment->add_option("--detail", experiment.detail, "also write per-sample JSON here");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << app.version() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (app.got_subcommand(cmd_analyze)) {
            cli_detail::deliver(cli_detail::run_analyze(analyze), analyze.output, out);
            return 0;
        }
        if (app.got_subcommand(cmd_braess)) {
            cli_detail::deliver(cli_detail::run_braess(braess), braess.output, out);
            return 0;
        }
        if (app.got_subcommand(cmd_paradox)) {
            cli_detail::deliver(cli_detail::run_paradox(paradox), paradox.output, out);
            return 0;
        }
        if (app.got_subcommand(cmd_verify)) {
            const auto [text, ok] = cli_detail::run_verify(verify);
            cli_detail::deliver(text, verify.output, out);
            return ok ? 0 : 3;
        }
        if (app.got_subcommand(cmd_experiment)) {
            experiment.p_given = p_option->count() > 0;
            if (experiment.kind == "gnp" && !experiment.p_given) {
                err << "usage error: --kind gnp requires --p\n";
                return 1;
            }
            if (experiment.kind == "trees" && experiment.p_given) {
                err << "usage error: --p applies to --kind gnp only\n";
                return 1;
            }
            if (experiment.kind == "gnp" && experiment.mode == "exhaustive") {
                err << "usage error: --mode exhaustive applies to --kind trees only\n";
                return 1;
            }
            cli_detail::run_experiment(experiment, out);
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::ParseError ? 1 : 2;
    }
    return 1;
}

inline int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
    return run_cli(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

} // namespace kemeny
