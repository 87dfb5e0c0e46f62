#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <vector>

#include "kemeny/ensembles.hpp"
#include "kemeny/graph.hpp"

using kemeny::Graph;
using kemeny::prufer_decode;

TEST_CASE("code decoding on known cases") {
    const Graph star = prufer_decode(4, {0, 0});
    CHECK(star.edges() == std::vector<kemeny::Edge>{{0, 1}, {0, 2}, {0, 3}});

    const Graph path = prufer_decode(4, {1, 2});
    CHECK(path.edges() == std::vector<kemeny::Edge>{{0, 1}, {1, 2}, {2, 3}});

    const Graph k2 = prufer_decode(2, {});
    CHECK(k2.edges() == std::vector<kemeny::Edge>{{0, 1}});

    CHECK_THROWS_AS(prufer_decode(4, {0}), kemeny::Error);
    CHECK_THROWS_AS(prufer_decode(4, {0, 4}), kemeny::Error);
    CHECK_THROWS_AS(prufer_decode(4, {0, -1}), kemeny::Error);
    CHECK_THROWS_AS(prufer_decode(1, {}), kemeny::Error);
}

TEST_CASE("decoding is a bijection onto labeled trees") {
    for (int n : {3, 4, 5}) {
        std::set<std::string> seen;
        std::size_t visits = 0;
        kemeny::for_each_labeled_tree(n, [&](const Graph& t) {
            REQUIRE(t.vertex_count() == n);
            REQUIRE(t.edge_count() == n - 1);
            REQUIRE(kemeny::is_connected(t));
            seen.insert(kemeny::edge_list_string(t));
            ++visits;
        });
        std::size_t expected = 1;
        for (int i = 0; i < n - 2; ++i) expected *= static_cast<std::size_t>(n);
        CHECK(visits == expected);
        CHECK(seen.size() == expected); // all distinct
    }
    CHECK_THROWS_AS(kemeny::for_each_labeled_tree(9, [](const Graph&) {}), kemeny::Error);
}

TEST_CASE("seeded sampling is reproducible") {
    const Graph a = kemeny::random_tree(12, 5);
    const Graph b = kemeny::random_tree(12, 5);
    CHECK(a == b);
    CHECK(a.edge_count() == 11);
    CHECK(kemeny::is_connected(a));
    CHECK_FALSE(a == kemeny::random_tree(12, 6));

    const Graph g1 = kemeny::random_connected_graph(8, 0.5, 42);
    const Graph g2 = kemeny::random_connected_graph(8, 0.5, 42);
    CHECK(g1 == g2);
    CHECK(kemeny::is_connected(g1));
}

TEST_CASE("connected sampling honors the edge probability bounds") {
    const Graph full = kemeny::random_connected_graph(5, 1.0, 9);
    CHECK(full.edge_count() == 10); // p = 1 forces the complete graph

    for (std::uint64_t seed = 0; seed < 20; ++seed)
        CHECK(kemeny::is_connected(kemeny::random_connected_graph(9, 0.3, seed)));

    CHECK_THROWS_AS(kemeny::random_connected_graph(5, 0.0, 1), kemeny::Error);
    CHECK_THROWS_AS(kemeny::random_connected_graph(5, 1.5, 1), kemeny::Error);
    CHECK_THROWS_AS(kemeny::random_connected_graph(0, 0.5, 1), kemeny::Error);
    // 12 vertices at p = 0.01 essentially never connect; 3 tries must fail
    CHECK_THROWS_AS(kemeny::random_connected_graph(12, 0.01, 1, 3), kemeny::Error);
}

TEST_CASE("pattern appearances on fixed graphs") {
    const auto cherry = kemeny::cherry_pattern();
    REQUIRE(cherry.pattern.vertex_count() == 3);
    CHECK(cherry.root == 0);

    const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(kemeny::appearance_count(star, cherry) == 3);

    const Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(kemeny::appearance_count(path, cherry) == 0);

    const Graph broom(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
    CHECK(kemeny::appearance_count(broom, cherry) == 1);

    CHECK_THROWS_AS(kemeny::appearance_count(Graph(3, {{0, 1}, {1, 2}}), cherry), kemeny::Error); // not smaller
    CHECK_THROWS_AS(kemeny::appearance_count(star, kemeny::RootedPattern{Graph(3, {{0, 1}}), 0}), kemeny::Error);
    CHECK_THROWS_AS(kemeny::appearance_count(star, kemeny::RootedPattern{cherry.pattern, 5}), kemeny::Error);
    const Graph big(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
    CHECK_THROWS_AS(kemeny::appearance_count(Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}}),
                                             kemeny::RootedPattern{big, 0}),
                    kemeny::Error);
}

TEST_CASE("exhaustive tree statistics at small sizes") {
    const auto report = kemeny::run_tree_experiment({4, 5}, 0, 1729, kemeny::TreeMode::exhaustive,
                                                    kemeny::ParadoxCheck::witness_edge, true);
    REQUIRE(report.rows.size() == 2);

    const auto& r4 = report.rows[0];
    CHECK(r4.n == 4);
    CHECK(r4.samples == 16);
    CHECK(r4.with_pendant_twins == 4); // exactly the four stars
    CHECK(r4.fraction_with_pendant_twins == 0.25);
    CHECK(r4.paradoxical == 4);
    CHECK(r4.fraction_paradoxical == 0.25);
    CHECK(r4.appearance_total == 4);
    CHECK(r4.mean_appearance == 0.25);
    CHECK(r4.sample_mode == "exhaustive");
    CHECK(r4.paradox_mode == "twin-edge-witness");

    const auto& r5 = report.rows[1];
    CHECK(r5.samples == 125);
    CHECK(r5.with_pendant_twins == 65); // 5 stars + 60 brooms
    CHECK(r5.paradoxical == 65);
    CHECK(r5.appearance_total == 20);
    CHECK(r5.mean_appearance == 0.16);

    // every paradoxical sample carries its twin-edge witness
    REQUIRE(report.details.size() == 16 + 125);
    for (const auto& d : report.details) {
        CHECK(d.paradoxical == d.has_pendant_twins);
        if (d.paradoxical) {
            REQUIRE(d.witness.has_value());
            CHECK_FALSE(d.delta.empty());
        } else {
            CHECK_FALSE(d.witness.has_value());
        }
    }
}

TEST_CASE("sampled tree reports are seed deterministic") {
    const auto a = kemeny::run_tree_experiment({6}, 40, 11, kemeny::TreeMode::sampled);
    const auto b = kemeny::run_tree_experiment({6}, 40, 11, kemeny::TreeMode::sampled);
    REQUIRE(a.rows.size() == 1);
    CHECK(a.rows[0].samples == 40);
    CHECK(a.rows[0].with_pendant_twins == b.rows[0].with_pendant_twins);
    CHECK(a.rows[0].paradoxical == b.rows[0].paradoxical);
    CHECK(a.rows[0].appearance_total == b.rows[0].appearance_total);
    CHECK(a.rows[0].paradoxical == a.rows[0].with_pendant_twins); // witness mode on trees
    CHECK_FALSE(a.notes.empty());
}

TEST_CASE("connected-model reports") {
    const auto report = kemeny::run_gnp_experiment({3}, 1.0, 5, 7);
    REQUIRE(report.rows.size() == 1);
    CHECK(report.kind == "gnp");
    CHECK(report.rows[0].samples == 5);
    CHECK(report.rows[0].with_pendant_twins == 0); // every draw is the triangle
    CHECK(report.rows[0].paradoxical == 0);
    CHECK(report.rows[0].appearance_total == 0);
    CHECK(report.rows[0].paradox_mode == "full-scan");
    CHECK_FALSE(report.notes.empty());
}

TEST_CASE("experiment argument guards") {
    CHECK_THROWS_AS(kemeny::run_tree_experiment({}, 10, 1, kemeny::TreeMode::sampled), kemeny::Error);
    CHECK_THROWS_AS(kemeny::run_tree_experiment({3}, 10, 1, kemeny::TreeMode::sampled), kemeny::Error);
    CHECK_THROWS_AS(kemeny::run_tree_experiment({4}, 0, 1, kemeny::TreeMode::sampled), kemeny::Error);
    CHECK_THROWS_AS(kemeny::run_gnp_experiment({4}, 0.0, 10, 1), kemeny::Error);
    CHECK_THROWS_AS(kemeny::run_gnp_experiment({4}, 0.5, 0, 1), kemeny::Error);
    CHECK_THROWS_AS(kemeny::run_gnp_experiment({1}, 0.5, 10, 1), kemeny::Error);
}
