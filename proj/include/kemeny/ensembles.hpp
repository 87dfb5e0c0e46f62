#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kemeny/braess.hpp"
#include "kemeny/error.hpp"
#include "kemeny/graph.hpp"
#include "kemeny/rational.hpp"
#include "kemeny/rng.hpp"

namespace kemeny {

/// Labeled tree on n vertices from a length n-2 code over 0..n-1. Decoding is
/// a bijection, so a uniform code gives a uniform labeled tree.
inline Graph prufer_decode(int n, const std::vector<int>& code) {
    if (n < 2) fail(ErrorKind::InvalidArgument, "tree decoding needs at least two vertices");
    if (static_cast<int>(code.size()) != n - 2)
        fail(ErrorKind::InvalidEntry, "code for " + std::to_string(n) + " vertices must have length " +
                                          std::to_string(n - 2));
    for (int x : code)
        if (x < 0 || x >= n) fail(ErrorKind::InvalidEntry, "code entry " + std::to_string(x) + " leaves 0.." +
                                                               std::to_string(n - 1));

    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int x : code) ++degree[static_cast<std::size_t>(x)];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n - 1));
    for (int x : code) {
        const int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, x);
        if (--degree[static_cast<std::size_t>(x)] == 1) leaves.insert(x);
    }
    const int last = *leaves.begin();
    edges.emplace_back(last, *leaves.rbegin());
    return Graph(n, std::move(edges));
}

/// Visits all n^(n-2) labeled trees, in lexicographic code order.
template <typename Fn>
void for_each_labeled_tree(int n, Fn&& fn) {
    if (n < 2) fail(ErrorKind::InvalidArgument, "tree enumeration needs at least two vertices");
    if (n > 8) fail(ErrorKind::TooLarge, "tree enumeration is limited to 8 vertices");
    std::vector<int> code(static_cast<std::size_t>(n - 2), 0);
    while (true) {
        fn(prufer_decode(n, code));
        int i = n - 3;
        while (i >= 0 && code[static_cast<std::size_t>(i)] == n - 1) {
            code[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++code[static_cast<std::size_t>(i)];
    }
}

inline Graph random_tree(int n, std::uint64_t seed) {
    if (n < 2) fail(ErrorKind::InvalidArgument, "tree sampling needs at least two vertices");
    SplitMix64 rng(seed);
    std::vector<int> code(static_cast<std::size_t>(n - 2));
    for (int& x : code) x = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    return prufer_decode(n, code);
}

/// Rejection-samples the Erdos-Renyi model until the draw is connected.
inline Graph random_connected_graph(int n, double p, std::uint64_t seed, int max_attempts = 1000) {
    if (n < 1) fail(ErrorKind::InvalidArgument, "vertex count must be positive");
    if (!(p > 0.0) || p > 1.0) fail(ErrorKind::InvalidArgument, "edge probability must lie in (0, 1]");
    if (max_attempts < 1) fail(ErrorKind::InvalidArgument, "at least one attempt is required");
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.unit() < p) edges.emplace_back(u, v);
        Graph g(n, std::move(edges));
        if (is_connected(g)) return g;
    }
    fail(ErrorKind::AttemptsExhausted,
         "no connected draw in " + std::to_string(max_attempts) + " attempts at p=" + std::to_string(p));
}

struct RootedPattern {
    Graph pattern;
    int root;
};

/// Path of length two rooted at its middle vertex.
inline RootedPattern cherry_pattern() { return {Graph(3, {{0, 1}, {0, 2}}), 0}; }

/// Number of ways the rooted pattern appears in g: vertex subsets W with
/// |W| = |pattern| whose induced subgraph equals the pattern under the
/// order-preserving bijection, and with exactly one edge leaving W, attached
/// at min(W).
inline std::uint64_t appearance_count(const Graph& g, const RootedPattern& pat) {
    const int h = pat.pattern.vertex_count();
    const int n = g.vertex_count();
    if (pat.root < 0 || pat.root >= h) fail(ErrorKind::VertexOutOfRange, "pattern root not in pattern");
    if (!is_connected(pat.pattern)) fail(ErrorKind::Disconnected, "pattern must be connected");
    if (h > 5) fail(ErrorKind::PatternTooLarge, "appearance counting is limited to 5 pattern vertices");
    if (h >= n) fail(ErrorKind::PatternNotSmaller, "pattern must have fewer vertices than the graph");

    std::vector<int> w(static_cast<std::size_t>(h));
    for (int i = 0; i < h; ++i) w[static_cast<std::size_t>(i)] = i;
    std::uint64_t count = 0;
    while (true) {
        bool induced_match = true;
        for (int i = 0; i < h && induced_match; ++i)
            for (int j = i + 1; j < h; ++j)
                if (pat.pattern.has_edge(i, j) !=
                    g.has_edge(w[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(j)])) {
                    induced_match = false;
                    break;
                }
        if (induced_match) {
            int external = 0;
            bool at_min = true;
            for (int i = 0; i < h; ++i) {
                const int gv = w[static_cast<std::size_t>(i)];
                for (int nb : g.neighbors(gv)) {
                    if (std::binary_search(w.begin(), w.end(), nb)) continue;
                    ++external;
                    if (gv != w[0]) at_min = false;
                }
            }
            if (external == 1 && at_min) ++count;
        }
        int i = h - 1;
        while (i >= 0 && w[static_cast<std::size_t>(i)] == n - h + i) --i;
        if (i < 0) break;
        ++w[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < h; ++j)
            w[static_cast<std::size_t>(j)] = w[static_cast<std::size_t>(j - 1)] + 1;
    }
    return count;
}

enum class TreeMode { sampled, exhaustive };
enum class ParadoxCheck { witness_edge, full_scan };

inline const char* tree_mode_name(TreeMode m) { return m == TreeMode::sampled ? "sampled" : "exhaustive"; }
inline const char* paradox_check_name(ParadoxCheck c) {
    return c == ParadoxCheck::witness_edge ? "twin-edge-witness" : "full-scan";
}

struct ExperimentRow {
    int n = 0;
    std::uint64_t samples = 0;
    std::uint64_t with_pendant_twins = 0;
    std::uint64_t paradoxical = 0;
    double fraction_with_pendant_twins = 0.0;
    double fraction_paradoxical = 0.0;
    std::uint64_t appearance_total = 0;
    double mean_appearance = 0.0;
    std::string paradox_mode;
    std::string sample_mode;
};

struct SampleDetail {
    int n = 0;
    std::uint64_t index = 0;
    std::string edges;
    bool has_pendant_twins = false;
    bool paradoxical = false;
    std::optional<std::pair<int, int>> witness;
    std::string delta; // exact change across the witness edge, when one exists
    std::uint64_t appearance = 0;
};

struct ExperimentReport {
    std::string kind;
    std::uint64_t seed = 0;
    double p = 0.0;
    TreeMode mode = TreeMode::sampled;
    ParadoxCheck paradox = ParadoxCheck::witness_edge;
    std::vector<std::string> notes;
    std::vector<ExperimentRow> rows;
    std::vector<SampleDetail> details;
};

namespace detail {

struct SampleOutcome {
    bool has_twins = false;
    bool paradoxical = false;
    std::optional<std::pair<int, int>> witness;
    std::string delta;
    std::uint64_t appearance = 0;
};

inline SampleOutcome examine_sample(const Graph& g, ParadoxCheck paradox) {
    SampleOutcome out;
    const auto twins = find_pendant_twins(g);
    out.has_twins = !twins.empty();
    if (paradox == ParadoxCheck::witness_edge) {
        // Only the edge joining the first pendant-twin pair is tested; graphs
        // without such a pair are reported as not shown paradoxical.
        if (out.has_twins) {
            const Rational delta = kemeny_delta(g, twins[0].a, twins[0].b);
            out.paradoxical = delta > 0;
            if (out.paradoxical) {
                out.witness = std::pair{twins[0].a, twins[0].b};
                out.delta = fraction_string(delta);
            }
        }
    } else {
        const ParadoxScan scan = paradox_scan(g);
        out.paradoxical = scan.paradoxical;
        if (scan.witness) {
            out.witness = scan.witness;
            for (const auto& row : scan.rows)
                if (std::pair{row.u, row.v} == *scan.witness) {
                    out.delta = fraction_string(row.delta);
                    break;
                }
        }
    }
    const RootedPattern cherry = cherry_pattern();
    out.appearance = g.vertex_count() > cherry.pattern.vertex_count() ? appearance_count(g, cherry) : 0;
    return out;
}

inline void finish_row(ExperimentRow& row) {
    const double s = static_cast<double>(row.samples);
    row.fraction_with_pendant_twins = static_cast<double>(row.with_pendant_twins) / s;
    row.fraction_paradoxical = static_cast<double>(row.paradoxical) / s;
    row.mean_appearance = static_cast<double>(row.appearance_total) / s;
}

inline void absorb(ExperimentRow& row, std::vector<SampleDetail>* details, const Graph& g, std::uint64_t index,
                   const SampleOutcome& outcome) {
    ++row.samples;
    if (outcome.has_twins) ++row.with_pendant_twins;
    if (outcome.paradoxical) ++row.paradoxical;
    row.appearance_total += outcome.appearance;
    if (details)
        details->push_back({row.n, index, edge_list_string(g), outcome.has_twins, outcome.paradoxical,
                            outcome.witness, outcome.delta, outcome.appearance});
}

} // namespace detail

/// Uniform labeled trees, one row per requested size. Sampled mode draws
/// samples_per_n trees; exhaustive mode walks all n^(n-2) of them.
inline ExperimentReport run_tree_experiment(const std::vector<int>& n_values, std::uint64_t samples_per_n,
                                            std::uint64_t seed, TreeMode mode,
                                            ParadoxCheck paradox = ParadoxCheck::witness_edge,
                                            bool collect_details = false) {
    if (n_values.empty()) fail(ErrorKind::InvalidArgument, "at least one size is required");
    for (int n : n_values)
        if (n < 4) fail(ErrorKind::InvalidArgument, "tree rows need n >= 4; smaller trees cannot gain edges paradoxically");
    if (mode == TreeMode::sampled && samples_per_n == 0)
        fail(ErrorKind::InvalidArgument, "at least one sample per size is required");

    ExperimentReport report;
    report.kind = "trees";
    report.seed = seed;
    report.mode = mode;
    report.paradox = paradox;
    report.notes.push_back("Trees are uniform over labeled trees; shape (isomorphism-class) frequencies would differ, "
                           "so compare against labeled-tree statistics only.");
    if (paradox == ParadoxCheck::witness_edge)
        report.notes.push_back("Paradox checks test only the edge joining the first pendant-twin pair; rows flag this "
                               "as twin-edge-witness.");

    for (int n : n_values) {
        ExperimentRow row;
        row.n = n;
        row.paradox_mode = paradox_check_name(paradox);
        row.sample_mode = tree_mode_name(mode);
        std::vector<SampleDetail>* details = collect_details ? &report.details : nullptr;
        if (mode == TreeMode::exhaustive) {
            std::uint64_t index = 0;
            for_each_labeled_tree(n, [&](const Graph& g) {
                detail::absorb(row, details, g, index++, detail::examine_sample(g, paradox));
            });
        } else {
            const std::uint64_t size_seed = derive_seed(seed, static_cast<std::uint64_t>(n));
            for (std::uint64_t index = 0; index < samples_per_n; ++index) {
                const Graph g = random_tree(n, derive_seed(size_seed, index));
                detail::absorb(row, details, g, index, detail::examine_sample(g, paradox));
            }
        }
        detail::finish_row(row);
        report.rows.push_back(std::move(row));
    }
    return report;
}

/// Connected Erdos-Renyi draws with a full paradox scan per sample.
inline ExperimentReport run_gnp_experiment(const std::vector<int>& n_values, double p, std::uint64_t samples_per_n,
                                           std::uint64_t seed, bool collect_details = false, int max_attempts = 1000) {
    if (n_values.empty()) fail(ErrorKind::InvalidArgument, "at least one size is required");
    for (int n : n_values)
        if (n < 2) fail(ErrorKind::InvalidArgument, "connected-model rows need n >= 2");
    if (samples_per_n == 0) fail(ErrorKind::InvalidArgument, "at least one sample per size is required");
    if (!(p > 0.0) || p > 1.0) fail(ErrorKind::InvalidArgument, "edge probability must lie in (0, 1]");

    ExperimentReport report;
    report.kind = "gnp";
    report.seed = seed;
    report.p = p;
    report.mode = TreeMode::sampled;
    report.paradox = ParadoxCheck::full_scan;
    report.notes.push_back("Samples are connected Erdos-Renyi draws, not uniform draws from any planarity-constrained "
                           "family; fractions are not comparable across models.");

    for (int n : n_values) {
        ExperimentRow row;
        row.n = n;
        row.paradox_mode = paradox_check_name(ParadoxCheck::full_scan);
        row.sample_mode = tree_mode_name(TreeMode::sampled);
        std::vector<SampleDetail>* details = collect_details ? &report.details : nullptr;
        const std::uint64_t size_seed = derive_seed(seed, static_cast<std::uint64_t>(n));
        for (std::uint64_t index = 0; index < samples_per_n; ++index) {
            const Graph g = random_connected_graph(n, p, derive_seed(size_seed, index), max_attempts);
            detail::absorb(row, details, g, index, detail::examine_sample(g, ParadoxCheck::full_scan));
        }
        detail::finish_row(row);
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace kemeny
