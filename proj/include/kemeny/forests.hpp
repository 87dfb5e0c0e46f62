#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "kemeny/error.hpp"
#include "kemeny/graph.hpp"
#include "kemeny/linalg.hpp"
#include "kemeny/matrix.hpp"
#include "kemeny/rational.hpp"

namespace kemeny {

/// Number of spanning trees, via a cofactor of the Laplacian.
inline Integer spanning_tree_count(const Graph& g) {
    if (!is_connected(g)) fail(ErrorKind::Disconnected, "spanning trees require a connected graph");
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    if (n == 1) return Integer(1);
    const Matrix<Integer> lap = laplacian_matrix(g);
    Matrix<Integer> minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j) minor(i - 1, j - 1) = lap(i, j);
    return det_bareiss(std::move(minor));
}

/// Effective resistance between all vertex pairs:
/// omega(i,j) = pinv(i,i) + pinv(j,j) - 2 pinv(i,j).
inline Matrix<Rational> resistance_matrix(const Graph& g) {
    if (!is_connected(g)) fail(ErrorKind::Disconnected, "resistance requires a connected graph");
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    const Matrix<Rational> pinv = pseudoinverse_laplacian(laplacian_matrix(g));
    Matrix<Rational> omega(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            omega(i, j) = pinv(i, i) + pinv(j, j) - 2 * pinv(i, j);
            omega(j, i) = omega(i, j);
        }
    return omega;
}

struct ForestData {
    Integer tau;             // spanning tree count
    Matrix<Rational> omega;  // effective resistances
    Matrix<Integer> s;       // s(i,j) = spanning 2-forests separating i and j
};

/// tau, omega, and S = tau * omega in one pass. S counts spanning 2-forests
/// in which i and j land in different components, which forces tau * omega to
/// be integral; a fractional entry would mean the linear algebra is wrong, so
/// that is checked here.
inline ForestData forest_data(const Graph& g) {
    if (!is_connected(g)) fail(ErrorKind::Disconnected, "2-forest counts require a connected graph");
    ForestData out{spanning_tree_count(g), resistance_matrix(g), {}};
    const std::size_t n = out.omega.rows();
    out.s = Matrix<Integer>(n, n);
    const Rational tau_q(out.tau, 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Rational scaled = tau_q * out.omega(i, j);
            if (!is_integer(scaled)) throw std::logic_error("tau * omega produced a non-integer 2-forest count");
            out.s(i, j) = numerator(scaled);
            out.s(j, i) = out.s(i, j);
        }
    return out;
}

inline Matrix<Integer> two_forest_matrix(const Graph& g) { return forest_data(g).s; }

namespace detail {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
            x = parent_[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[static_cast<std::size_t>(a)] = b;
        return true;
    }

private:
    std::vector<int> parent_;
};

} // namespace detail

/// Literal count of spanning 2-forests separating each pair: enumerate all
/// (n-2)-edge subsets, keep the acyclic ones (exactly two components then),
/// and tally separated pairs. Exponential; meant as an oracle for small n.
inline Matrix<Integer> two_forest_matrix_bruteforce(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 10) fail(ErrorKind::TooLarge, "exhaustive 2-forest count is limited to 10 vertices");
    if (!is_connected(g)) fail(ErrorKind::Disconnected, "2-forest counts require a connected graph");
    const std::size_t un = static_cast<std::size_t>(n);
    Matrix<Integer> s(un, un);
    if (n == 1) return s;

    const auto& edges = g.edges();
    const int m = static_cast<int>(edges.size());
    const int k = n - 2;
    std::vector<int> pick(static_cast<std::size_t>(k));
    std::iota(pick.begin(), pick.end(), 0);
    auto advance = [&]() {
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - k + i) --i;
        if (i < 0) return false;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        return true;
    };

    if (k > m) return s; // cannot even pick n-2 edges
    do {
        detail::UnionFind uf(n);
        bool acyclic = true;
        for (int idx : pick) {
            const auto& [u, v] = edges[static_cast<std::size_t>(idx)];
            if (!uf.unite(u, v)) {
                acyclic = false;
                break;
            }
        }
        if (!acyclic) continue;
        // n-2 acyclic edges on n vertices leave exactly two components.
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (uf.find(i) != uf.find(j)) {
                    s(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) += 1;
                    s(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) += 1;
                }
    } while (advance());
    return s;
}

} // namespace kemeny
