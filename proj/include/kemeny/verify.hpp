#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kemeny/braess.hpp"
#include "kemeny/enumerate.hpp"
#include "kemeny/error.hpp"
#include "kemeny/forests.hpp"
#include "kemeny/graph.hpp"
#include "kemeny/kemeny_constant.hpp"
#include "kemeny/rational.hpp"

namespace kemeny {

struct VerificationChecks {
    std::uint64_t lambda_positive = 0;      // integer criterion is positive
    std::uint64_t kappa_increase = 0;       // joining fresh twins raises the constant
    std::uint64_t criterion_equivalence = 0; // the two verdicts above agree
    std::uint64_t forest_oracle = 0;        // algebraic S equals literal 2-forest count
    std::uint64_t tau_identities = 0;       // tree counts of the two constructions
    std::uint64_t s_tables = 0;             // closed forms for S of the constructions
    std::uint64_t inequality = 0;           // 4m d'Se_v >= d'Sd
};

struct VerificationSummary {
    int max_n = 0;
    std::vector<std::pair<int, std::uint64_t>> graphs_per_n;
    VerificationChecks checks;
    std::vector<std::string> failures;

    bool ok() const noexcept { return failures.empty(); }
    std::uint64_t total_checks() const noexcept {
        return checks.lambda_positive + checks.kappa_increase + checks.criterion_equivalence +
               checks.forest_oracle + checks.tau_identities + checks.s_tables + checks.inequality;
    }
};

namespace detail {

inline std::string describe(const Graph& g, int v) {
    return "n=" + std::to_string(g.vertex_count()) + " edges " + edge_list_string(g) + " vertex " +
           std::to_string(v);
}

} // namespace detail

/// Exhaustively re-proves the package's core claims on every connected graph
/// with 2..max_n vertices:
///   - the algebraic 2-forest matrix matches a literal subset count (n <= 5),
///   - attaching pendant twins keeps the tree count, joining them triples it,
///   - the 2-forest matrices of both constructions match their closed forms,
///   - 4m d'Se_v >= d'Sd at every vertex,
///   - the integer criterion is positive, the constant really increases,
///     and the two verdicts agree at every vertex.
inline VerificationSummary verify_small_graphs(int max_n) {
    if (max_n < 2) fail(ErrorKind::InvalidArgument, "verification needs max-n of at least 2");
    if (max_n > 6) fail(ErrorKind::TooLarge, "exhaustive verification is limited to 6 vertices");

    VerificationSummary summary;
    summary.max_n = max_n;
    auto note = [&](bool good, std::uint64_t& counter, const std::string& label, const Graph& g, int v) {
        ++counter;
        if (!good) summary.failures.push_back(label + " failed at " + detail::describe(g, v));
    };

    for (int n = 2; n <= max_n; ++n) {
        std::uint64_t count = 0;
        for_each_connected_graph(n, [&](const Graph& g) {
            ++count;
            const ForestData fd = forest_data(g);
            const Integer dsd = degree_s_degree(g, fd.s);
            const Integer m(g.edge_count());

            if (n <= 5)
                note(fd.s == two_forest_matrix_bruteforce(g), summary.checks.forest_oracle, "2-forest oracle", g, -1);

            for (int v = 0; v < n; ++v) {
                const Integer dsv = degree_s_column(g, fd.s, v);
                note(4 * m * dsv - dsd >= 0, summary.checks.inequality, "degree-weight inequality", g, v);

                const Integer lambda = detail::lambda_from_forest(g, fd, dsd, v);
                note(lambda > 0, summary.checks.lambda_positive, "integer criterion positivity", g, v);

                const PendantAttachment open = attach_pendant_twins(g, v);
                const Graph closed = close_twins(open.graph, open.a, open.b);
                const ForestData fd_open = forest_data(open.graph);
                const ForestData fd_closed = forest_data(closed);

                note(fd_open.tau == fd.tau, summary.checks.tau_identities, "tree count after attaching", g, v);
                note(fd_closed.tau == 3 * fd.tau, summary.checks.tau_identities, "tree count after joining", g, v);

                const std::size_t un = static_cast<std::size_t>(n);
                const std::size_t uv = static_cast<std::size_t>(v);
                const std::size_t a = un;     // first pendant id
                const std::size_t b = un + 1; // second pendant id
                Matrix<Integer> predicted_open(un + 2, un + 2);
                Matrix<Integer> predicted_closed(un + 2, un + 2);
                for (std::size_t i = 0; i < un; ++i)
                    for (std::size_t j = 0; j < un; ++j) {
                        predicted_open(i, j) = fd.s(i, j);
                        predicted_closed(i, j) = 3 * fd.s(i, j);
                    }
                for (std::size_t j = 0; j < un; ++j) {
                    const Integer open_boundary = fd.tau + fd.s(uv, j);
                    const Integer closed_boundary = 3 * fd.s(uv, j) + 2 * fd.tau;
                    for (std::size_t pendant : {a, b}) {
                        predicted_open(pendant, j) = open_boundary;
                        predicted_open(j, pendant) = open_boundary;
                        predicted_closed(pendant, j) = closed_boundary;
                        predicted_closed(j, pendant) = closed_boundary;
                    }
                }
                predicted_open(a, b) = predicted_open(b, a) = 2 * fd.tau;
                predicted_closed(a, b) = predicted_closed(b, a) = 2 * fd.tau;

                note(fd_open.s == predicted_open, summary.checks.s_tables, "2-forest table after attaching", g, v);
                note(fd_closed.s == predicted_closed, summary.checks.s_tables, "2-forest table after joining", g, v);

                const Rational kappa_tilde = kemeny_from_forest(open.graph, fd_open);
                const Rational kappa_hat = kemeny_from_forest(closed, fd_closed);
                note(kappa_hat > kappa_tilde, summary.checks.kappa_increase, "constant increase", g, v);
                note((kappa_hat > kappa_tilde) == (lambda > 0), summary.checks.criterion_equivalence,
                     "criterion equivalence", g, v);
            }
        });
        summary.graphs_per_n.emplace_back(n, count);
    }
    return summary;
}

} // namespace kemeny
