#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "kemeny/enumerate.hpp"
#include "kemeny/graph.hpp"
#include "kemeny/kemeny_constant.hpp"
#include "kemeny/rng.hpp"

using kemeny::Graph;
using kemeny::kemeny_combinatorial;
using kemeny::kemeny_spectral;
using kemeny::kemeny_value;
using kemeny::Rational;

namespace {

Graph diamond() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}); }

Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

} // namespace

TEST_CASE("exact constants of fixed graphs") {
    CHECK(kemeny_combinatorial(Graph(2, {{0, 1}})) == Rational(1, 2));
    CHECK(kemeny_combinatorial(Graph(3, {{0, 1}, {1, 2}})) == Rational(3, 2));
    CHECK(kemeny_combinatorial(complete(3)) == Rational(4, 3));
    CHECK(kemeny_combinatorial(Graph(4, {{0, 1}, {0, 2}, {0, 3}})) == Rational(5, 2));
    CHECK(kemeny_combinatorial(diamond()) == Rational(47, 20));
    // triangle with one pendant
    CHECK(kemeny_combinatorial(Graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}})) == Rational(61, 24));
}

TEST_CASE("complete graphs follow the closed form") {
    for (int n = 2; n <= 7; ++n) {
        CHECK(kemeny_combinatorial(complete(n)) == Rational((n - 1) * (n - 1), n));
    }
}

TEST_CASE("both routes agree to floating accuracy") {
    for (const Graph& g : {diamond(), complete(5), Graph(3, {{0, 1}, {1, 2}}), Graph(4, {{0, 1}, {0, 2}, {0, 3}})}) {
        const auto kv = kemeny_value(g);
        CHECK(kv.agreement_gap < 1e-12);
        CHECK(std::abs(kv.floating - kemeny_spectral(g)) == 0.0);
        CHECK(kv.exact == kemeny_combinatorial(g));
    }
}

TEST_CASE("the constant ignores vertex labels") {
    kemeny::SplitMix64 rng(99);
    const Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});
    const Rational base = kemeny_combinatorial(g);
    std::vector<int> perm{0, 1, 2, 3, 4};
    for (int round = 0; round < 20; ++round) {
        for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
        CHECK(kemeny_combinatorial(kemeny::relabel(g, perm)) == base);
    }
}

TEST_CASE("walk preconditions") {
    CHECK_THROWS_AS(kemeny_combinatorial(Graph(1, {})), kemeny::Error);
    CHECK_THROWS_AS(kemeny_combinatorial(Graph(4, {{0, 1}, {2, 3}})), kemeny::Error);
    CHECK_THROWS_AS(kemeny_spectral(Graph(1, {})), kemeny::Error);
    CHECK_THROWS_AS(kemeny_spectral(Graph(4, {{0, 1}, {2, 3}})), kemeny::Error);
    try {
        kemeny_combinatorial(Graph(1, {}));
    } catch (const kemeny::Error& e) {
        CHECK(e.kind() == kemeny::ErrorKind::Trivial);
    }
}

TEST_CASE("stationary distribution is degree over twice the edges") {
    const auto w = kemeny::stationary_distribution(Graph(3, {{0, 1}, {1, 2}}));
    REQUIRE(w.size() == 3);
    CHECK(w[0] == Rational(1, 4));
    CHECK(w[1] == Rational(1, 2));
    CHECK(w[2] == Rational(1, 4));

    Rational total(0);
    for (const auto& x : kemeny::stationary_distribution(diamond())) total += x;
    CHECK(total == 1);

    CHECK_THROWS_AS(kemeny::stationary_distribution(Graph(1, {})), kemeny::Error);
    CHECK_THROWS_AS(kemeny::stationary_distribution(Graph(3, {{0, 1}})), kemeny::Error);
}

TEST_CASE("walk simulation is deterministic and calibrated") {
    const auto a = kemeny::estimate_kemeny_monte_carlo(diamond(), 2000, 7);
    const auto b = kemeny::estimate_kemeny_monte_carlo(diamond(), 2000, 7);
    CHECK(a.mean == b.mean);
    CHECK(a.standard_error == b.standard_error);

    const auto c = kemeny::estimate_kemeny_monte_carlo(diamond(), 2000, 8);
    CHECK(a.mean != c.mean); // different seed, different draws

    // 2000 trials keep the estimate within a few standard errors of 47/20
    CHECK(std::abs(a.mean - 2.35) < 4 * a.standard_error);
    CHECK(a.standard_error > 0.0);
    CHECK(a.standard_error < 0.2);
}

TEST_CASE("walk simulation edge cases") {
    const auto one = kemeny::estimate_kemeny_monte_carlo(Graph(2, {{0, 1}}), 1, 3);
    CHECK(one.standard_error == 0.0);
    CHECK((one.mean == 0.0 || one.mean == 1.0)); // start equals target or one hop

    CHECK_THROWS_AS(kemeny::estimate_kemeny_monte_carlo(diamond(), 0, 1), kemeny::Error);
    CHECK_THROWS_AS(kemeny::estimate_kemeny_monte_carlo(Graph(1, {}), 10, 1), kemeny::Error);
    CHECK_THROWS_AS(kemeny::estimate_kemeny_monte_carlo(Graph(4, {{0, 1}, {2, 3}}), 10, 1), kemeny::Error);
}

TEST_CASE("spectral route drops only the unit eigenvalue") {
    // bipartite graphs put -1 in the spectrum; it must stay in the sum
    const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(kemeny_spectral(star) == Catch::Approx(2.5).epsilon(1e-12));
    const Graph p3(3, {{0, 1}, {1, 2}});
    CHECK(kemeny_spectral(p3) == Catch::Approx(1.5).epsilon(1e-12));
}
