#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "kemeny/error.hpp"
#include "kemeny/matrix.hpp"
#include "kemeny/rational.hpp"

namespace kemeny {

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..n-1. Edges are stored
/// canonically (smaller endpoint first, lexicographically sorted), so equal
/// graphs compare equal and serializations are deterministic.
class Graph {
public:
    Graph(int n, std::vector<Edge> edges) : n_(n) {
        if (n < 1) fail(ErrorKind::InvalidArgument, "vertex count must be positive");
        for (auto& [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                fail(ErrorKind::VertexOutOfRange,
                     "edge (" + std::to_string(u) + "," + std::to_string(v) + ") leaves 0.." + std::to_string(n - 1));
            if (u == v) fail(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        const auto dup = std::adjacent_find(edges.begin(), edges.end());
        if (dup != edges.end())
            fail(ErrorKind::DuplicateEdge,
                 "edge (" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ") given twice");
        edges_ = std::move(edges);
        adjacency_.resize(static_cast<std::size_t>(n));
        for (const auto& [u, v] : edges_) {
            adjacency_[static_cast<std::size_t>(u)].push_back(v);
            adjacency_[static_cast<std::size_t>(v)].push_back(u);
        }
        for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
    }

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adjacency_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        const auto& nbrs = adjacency_[static_cast<std::size_t>(u)];
        return std::binary_search(nbrs.begin(), nbrs.end(), v);
    }

    /// Copy of this graph with one extra edge.
    Graph with_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) fail(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(u));
        if (has_edge(u, v))
            fail(ErrorKind::EdgeAlreadyPresent,
                 "edge (" + std::to_string(u) + "," + std::to_string(v) + ") already present");
        auto edges = edges_;
        edges.emplace_back(u, v);
        return Graph(n_, std::move(edges));
    }

    bool operator==(const Graph& other) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            fail(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v) + " leaves 0.." + std::to_string(n_ - 1));
    }

    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
};

inline bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

/// All unordered vertex pairs that are not edges, lexicographically sorted.
inline std::vector<Edge> non_edges(const Graph& g) {
    std::vector<Edge> out;
    const int n = g.vertex_count();
    auto it = g.edges().begin();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (it != g.edges().end() && *it == Edge{u, v}) {
                ++it;
            } else {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

struct PendantTwinPair {
    int a;      // smaller pendant vertex
    int b;      // larger pendant vertex
    int common; // their shared neighbor
};

/// Pairs of degree-1 vertices attached to the same vertex.
inline std::vector<PendantTwinPair> find_pendant_twins(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> pendants_at(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == 1) pendants_at[static_cast<std::size_t>(g.neighbors(v)[0])].push_back(v);
    }
    std::vector<PendantTwinPair> out;
    for (int c = 0; c < n; ++c) {
        const auto& group = pendants_at[static_cast<std::size_t>(c)];
        for (std::size_t i = 0; i < group.size(); ++i)
            for (std::size_t j = i + 1; j < group.size(); ++j) out.push_back({group[i], group[j], c});
    }
    std::sort(out.begin(), out.end(),
              [](const PendantTwinPair& x, const PendantTwinPair& y) { return std::pair{x.a, x.b} < std::pair{y.a, y.b}; });
    return out;
}

struct PendantAttachment {
    Graph graph;
    int a;
    int b;
};

/// Attaches two new pendant vertices at v. The new vertices always get the two
/// highest ids (a = n, b = n+1) so callers can locate them deterministically.
inline PendantAttachment attach_pendant_twins(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        fail(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v) + " not in graph");
    if (!is_connected(g)) fail(ErrorKind::Disconnected, "pendant twins are attached to connected graphs only");
    const int n = g.vertex_count();
    auto edges = g.edges();
    edges.emplace_back(v, n);
    edges.emplace_back(v, n + 1);
    return {Graph(n + 2, std::move(edges)), n, n + 1};
}

/// Joins two previously attached twins by an edge.
inline Graph close_twins(const Graph& g, int a, int b) { return g.with_edge(a, b); }

/// Relabels vertices: vertex v becomes perm[v].
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    const int n = g.vertex_count();
    if (static_cast<int>(perm.size()) != n) fail(ErrorKind::InvalidArgument, "permutation size mismatch");
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (int p : perm) {
        if (p < 0 || p >= n || hit[static_cast<std::size_t>(p)])
            fail(ErrorKind::InvalidArgument, "not a permutation of 0..n-1");
        hit[static_cast<std::size_t>(p)] = 1;
    }
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const auto& [u, v] : g.edges())
        edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return Graph(n, std::move(edges));
}

struct DerivedMatrices {
    Matrix<Integer> adjacency;
    Matrix<Integer> degree;
    Matrix<Integer> laplacian;
    Matrix<Rational> transition; // D^-1 A; defined only when every degree is positive
};

inline Matrix<Integer> laplacian_matrix(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    Matrix<Integer> lap(n, n);
    for (const auto& [u, v] : g.edges()) {
        const auto i = static_cast<std::size_t>(u);
        const auto j = static_cast<std::size_t>(v);
        lap(i, i) += 1;
        lap(j, j) += 1;
        lap(i, j) -= 1;
        lap(j, i) -= 1;
    }
    return lap;
}

inline DerivedMatrices derived_matrices(const Graph& g) {
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0)
            fail(ErrorKind::IsolatedVertex, "vertex " + std::to_string(v) + " is isolated; transition matrix undefined");
    const auto un = static_cast<std::size_t>(n);
    DerivedMatrices out{Matrix<Integer>(un, un), Matrix<Integer>(un, un), Matrix<Integer>(un, un),
                        Matrix<Rational>(un, un)};
    for (const auto& [u, v] : g.edges()) {
        out.adjacency(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) = 1;
        out.adjacency(static_cast<std::size_t>(v), static_cast<std::size_t>(u)) = 1;
    }
    for (int v = 0; v < n; ++v) {
        const auto i = static_cast<std::size_t>(v);
        out.degree(i, i) = g.degree(v);
        for (int w : g.neighbors(v)) out.transition(i, static_cast<std::size_t>(w)) = Rational(1, g.degree(v));
    }
    out.laplacian = laplacian_matrix(g);
    return out;
}

inline std::string edge_list_string(const Graph& g) {
    std::string s;
    for (const auto& [u, v] : g.edges()) {
        if (!s.empty()) s += " ";
        s += std::to_string(u) + "-" + std::to_string(v);
    }
    return s.empty() ? "(no edges)" : s;
}

} // namespace kemeny
