#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kemeny/error.hpp"
#include "kemeny/forests.hpp"
#include "kemeny/graph.hpp"
#include "kemeny/kemeny_constant.hpp"
#include "kemeny/matrix.hpp"
#include "kemeny/rational.hpp"

namespace kemeny {

/// d^T S e_v: degree-weighted sum of v's row of the 2-forest matrix.
inline Integer degree_s_column(const Graph& g, const Matrix<Integer>& s, int v) {
    const int n = g.vertex_count();
    Integer total(0);
    for (int j = 0; j < n; ++j)
        total += Integer(g.degree(j)) * s(static_cast<std::size_t>(v), static_cast<std::size_t>(j));
    return total;
}

namespace detail {

inline Integer lambda_from_forest(const Graph& g, const ForestData& fd, const Integer& dsd, int v) {
    const Integer m(g.edge_count());
    return -3 * dsd + 12 * m * degree_s_column(g, fd.s, v) + (8 * m * m + 4 * m - 12) * fd.tau;
}

} // namespace detail

/// Integer score whose sign decides whether closing a fresh pendant-twin pair
/// at v raises the walk's mean hitting time. Positive means it does.
inline Integer lambda_v(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        fail(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v) + " not in graph");
    detail::require_walkable(g);
    const ForestData fd = forest_data(g);
    return detail::lambda_from_forest(g, fd, degree_s_degree(g, fd.s), v);
}

struct TwinBraessEvidence {
    Integer lambda;       // integer criterion at v
    Rational kappa_tilde; // constant after attaching pendant twins at v
    Rational kappa_hat;   // constant after additionally joining the twins
    bool verdict;         // kappa_hat > kappa_tilde
};

/// Decides v-twin-Braess both ways: by the integer criterion and by building
/// the two graphs and comparing their constants exactly. The two routes must
/// agree; a mismatch is reported as an error rather than silently resolved.
inline TwinBraessEvidence is_v_twin_braess(const Graph& g, int v) {
    TwinBraessEvidence out{lambda_v(g, v), {}, {}, false};
    const PendantAttachment open = attach_pendant_twins(g, v);
    const Graph closed = close_twins(open.graph, open.a, open.b);
    out.kappa_tilde = kemeny_combinatorial(open.graph);
    out.kappa_hat = kemeny_combinatorial(closed);
    out.verdict = out.kappa_hat > out.kappa_tilde;
    if (out.verdict != (out.lambda > 0))
        fail(ErrorKind::CriterionMismatch,
             "integer criterion and direct comparison disagree at vertex " + std::to_string(v) + " on " +
                 edge_list_string(g));
    return out;
}

struct BraessVertexRow {
    int vertex;
    Integer lambda;
    Rational kappa_tilde;
    Rational kappa_hat;
    bool verdict;
};

struct BraessReport {
    std::vector<BraessVertexRow> vertices;
    bool twin_braess; // true when the verdict holds at every vertex
};

/// Evaluates every vertex, sharing one forest computation for the criterion.
inline BraessReport is_twin_braess(const Graph& g) {
    detail::require_walkable(g);
    const ForestData fd = forest_data(g);
    const Integer dsd = degree_s_degree(g, fd.s);
    BraessReport report{{}, true};
    for (int v = 0; v < g.vertex_count(); ++v) {
        BraessVertexRow row{v, detail::lambda_from_forest(g, fd, dsd, v), {}, {}, false};
        const PendantAttachment open = attach_pendant_twins(g, v);
        const Graph closed = close_twins(open.graph, open.a, open.b);
        row.kappa_tilde = kemeny_combinatorial(open.graph);
        row.kappa_hat = kemeny_combinatorial(closed);
        row.verdict = row.kappa_hat > row.kappa_tilde;
        if (row.verdict != (row.lambda > 0))
            fail(ErrorKind::CriterionMismatch,
                 "integer criterion and direct comparison disagree at vertex " + std::to_string(v) + " on " +
                     edge_list_string(g));
        report.twin_braess = report.twin_braess && row.verdict;
        report.vertices.push_back(std::move(row));
    }
    return report;
}

/// Change in the constant when edge (u,v) is added.
inline Rational kemeny_delta(const Graph& g, int u, int v) {
    const Graph augmented = g.with_edge(u, v);
    return kemeny_combinatorial(augmented) - kemeny_combinatorial(g);
}

struct NonEdgeDelta {
    int u;
    int v;
    Rational delta;
    bool paradoxical; // delta > 0
};

struct ParadoxScan {
    std::vector<NonEdgeDelta> rows;               // lexicographic over non-edges
    bool paradoxical;                             // some row is paradoxical
    std::optional<std::pair<int, int>> witness;   // first paradoxical non-edge
};

/// Tests every missing edge for a paradoxical addition.
inline ParadoxScan paradox_scan(const Graph& g) {
    detail::require_walkable(g);
    const Rational base = kemeny_combinatorial(g);
    ParadoxScan scan{{}, false, std::nullopt};
    for (const auto& [u, v] : non_edges(g)) {
        const Rational delta = kemeny_combinatorial(g.with_edge(u, v)) - base;
        const bool paradoxical = delta > 0;
        if (paradoxical && !scan.witness) scan.witness = std::pair{u, v};
        scan.paradoxical = scan.paradoxical || paradoxical;
        scan.rows.push_back({u, v, delta, paradoxical});
    }
    return scan;
}

} // namespace kemeny
