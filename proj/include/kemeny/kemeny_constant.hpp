#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "kemeny/error.hpp"
#include "kemeny/forests.hpp"
#include "kemeny/graph.hpp"
#include "kemeny/linalg.hpp"
#include "kemeny/matrix.hpp"
#include "kemeny/rational.hpp"
#include "kemeny/rng.hpp"

namespace kemeny {

namespace detail {

inline void require_walkable(const Graph& g) {
    if (g.vertex_count() < 2) fail(ErrorKind::Trivial, "a random walk needs at least two vertices");
    if (!is_connected(g)) fail(ErrorKind::Disconnected, "the walk's mean hitting time diverges on a disconnected graph");
}

} // namespace detail

/// Spectral route: sum of 1/(1 - lambda) over the non-unit eigenvalues of the
/// walk matrix. The symmetrized form D^{-1/2} A D^{-1/2} shares the spectrum
/// of D^{-1} A, so a self-adjoint solver applies.
inline double kemeny_spectral(const Graph& g) {
    detail::require_walkable(g);
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    Matrix<double> sym(n, n);
    std::vector<double> inv_sqrt_degree(n);
    for (std::size_t v = 0; v < n; ++v) inv_sqrt_degree[v] = 1.0 / std::sqrt(static_cast<double>(g.degree(static_cast<int>(v))));
    for (const auto& [u, v] : g.edges()) {
        const auto i = static_cast<std::size_t>(u);
        const auto j = static_cast<std::size_t>(v);
        sym(i, j) = inv_sqrt_degree[i] * inv_sqrt_degree[j];
        sym(j, i) = sym(i, j);
    }
    const std::vector<double> eigenvalues = symmetric_eigenvalues(sym);
    // Eigenvalues come back ascending; the last one is the unit eigenvalue.
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) total += 1.0 / (1.0 - eigenvalues[i]);
    return total;
}

/// d^T S d with the symmetric half of S enumerated once.
inline Integer degree_s_degree(const Graph& g, const Matrix<Integer>& s) {
    const int n = g.vertex_count();
    Integer total(0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            total += Integer(g.degree(i)) * Integer(g.degree(j)) * s(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    return 2 * total;
}

/// Combinatorial route on precomputed forest data: d^T S d / (4 m tau).
inline Rational kemeny_from_forest(const Graph& g, const ForestData& fd) {
    return Rational(degree_s_degree(g, fd.s), 4 * Integer(g.edge_count()) * fd.tau);
}

inline Rational kemeny_combinatorial(const Graph& g) {
    detail::require_walkable(g);
    return kemeny_from_forest(g, forest_data(g));
}

struct KemenyValue {
    Rational exact;       // combinatorial route
    double floating;      // spectral route
    double agreement_gap; // |exact - floating|
};

inline KemenyValue kemeny_value(const Graph& g) {
    KemenyValue out{kemeny_combinatorial(g), kemeny_spectral(g), 0.0};
    out.agreement_gap = std::abs(to_double(out.exact) - out.floating);
    return out;
}

/// Stationary distribution of the walk: w(i) = deg(i) / 2m.
inline std::vector<Rational> stationary_distribution(const Graph& g) {
    const int n = g.vertex_count();
    const Integer two_m = 2 * Integer(g.edge_count());
    std::vector<Rational> w(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == 0)
            fail(ErrorKind::IsolatedVertex, "vertex " + std::to_string(v) + " is isolated; the walk has no stationary law");
        w[static_cast<std::size_t>(v)] = Rational(g.degree(v), two_m);
    }
    return w;
}

struct MonteCarloEstimate {
    double mean;           // average hitting time over trials
    double standard_error; // sample standard deviation / sqrt(trials)
};

/// Simulates the defining experiment: draw start and target independently
/// from the stationary law, walk until the target is hit, average the step
/// counts. Start == target counts as zero steps.
inline MonteCarloEstimate estimate_kemeny_monte_carlo(const Graph& g, std::uint64_t trials, std::uint64_t seed) {
    detail::require_walkable(g);
    if (trials == 0) fail(ErrorKind::InvalidArgument, "at least one trial is required");

    // Index into the list of edge endpoints: each vertex appears deg(v)
    // times, so a uniform pick is exactly stationary.
    std::vector<int> endpoint_of;
    endpoint_of.reserve(2 * static_cast<std::size_t>(g.edge_count()));
    for (const auto& [u, v] : g.edges()) {
        endpoint_of.push_back(u);
        endpoint_of.push_back(v);
    }

    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        SplitMix64 rng(derive_seed(seed, trial));
        const int start = endpoint_of[rng.below(endpoint_of.size())];
        const int target = endpoint_of[rng.below(endpoint_of.size())];
        std::uint64_t steps = 0;
        int at = start;
        while (at != target) {
            const auto& nbrs = g.neighbors(at);
            at = nbrs[rng.below(nbrs.size())];
            ++steps;
        }
        const double x = static_cast<double>(steps);
        sum += x;
        sum_sq += x * x;
    }
    const double t = static_cast<double>(trials);
    const double mean = sum / t;
    double se = 0.0;
    if (trials > 1) {
        const double variance = (sum_sq - t * mean * mean) / (t - 1.0);
        se = std::sqrt(variance > 0.0 ? variance : 0.0) / std::sqrt(t);
    }
    return {mean, se};
}

} // namespace kemeny
