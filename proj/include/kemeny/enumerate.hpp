#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kemeny/error.hpp"
#include "kemeny/graph.hpp"

namespace kemeny {

/// Visits every connected labeled graph on n vertices exactly once, in
/// increasing order of edge-set bitmask (bit k = k-th pair in lexicographic
/// order). 2^C(n,2) masks are touched, so n is capped.
template <typename Fn>
void for_each_connected_graph(int n, Fn&& fn) {
    if (n < 1) fail(ErrorKind::InvalidArgument, "vertex count must be positive");
    if (n > 7) fail(ErrorKind::TooLarge, "connected graph enumeration is limited to 7 vertices");

    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    const int p = static_cast<int>(pairs.size());

    for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
        // Cheap connectivity probe on vertex bitmasks before building a Graph.
        std::uint32_t adjacency[7] = {};
        for (int k = 0; k < p; ++k) {
            if (mask >> k & 1u) {
                adjacency[pairs[static_cast<std::size_t>(k)].first] |= 1u << pairs[static_cast<std::size_t>(k)].second;
                adjacency[pairs[static_cast<std::size_t>(k)].second] |= 1u << pairs[static_cast<std::size_t>(k)].first;
            }
        }
        std::uint32_t reached = 1u;
        std::uint32_t frontier = 1u;
        while (frontier != 0) {
            std::uint32_t next = 0;
            for (int v = 0; v < n; ++v)
                if (frontier >> v & 1u) next |= adjacency[v];
            frontier = next & ~reached;
            reached |= next;
        }
        if (reached != (1u << n) - 1u) continue;

        std::vector<std::pair<int, int>> edges;
        for (int k = 0; k < p; ++k)
            if (mask >> k & 1u) edges.push_back(pairs[static_cast<std::size_t>(k)]);
        fn(Graph(n, std::move(edges)));
    }
}

} // namespace kemeny
