#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "strongrecolor/graph.hpp"
#include "strongrecolor/trees.hpp"
#include "support/oracles.hpp"

using namespace strongrecolor;

namespace {

std::vector<int> degree_multiset(const Graph& g) {
    std::vector<int> d;
    for (int v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1ull) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

} // namespace

TEST_CASE("construction normalizes and validates edges") {
    Graph g(3, {{2, 0}, {1, 2}});
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});
    CHECK(g.adjacent(2, 0));
    CHECK(!g.adjacent(0, 1));

    CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(-1, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {}, {"only-one"}), std::invalid_argument);
}

TEST_CASE("family constructors have the advertised shapes") {
    CHECK(make_path(1).vertex_count() == 1);
    CHECK(make_path(5).edges().size() == 4);
    CHECK(make_cycle(5).edges().size() == 5);
    CHECK_THROWS_AS(make_path(0), std::invalid_argument);
    CHECK_THROWS_AS(make_cycle(2), std::invalid_argument);

    CHECK(make_complete_bipartite(2, 3).edges().size() == 6);
    CHECK(degree_multiset(make_complete_bipartite(2, 3)) == std::vector<int>{2, 2, 2, 3, 3});
    CHECK(degree_multiset(make_star(4)) == std::vector<int>{1, 1, 1, 1, 4});

    // Hub with n leaves plus a pendant 2-path: degrees (n+1, 1 x n, 2, 1).
    const Graph psi2 = make_psi(2);
    CHECK(psi2.vertex_count() == 5);
    CHECK(psi2.degree(0) == 3);
    CHECK(degree_multiset(psi2) == std::vector<int>{1, 1, 1, 2, 3});
    CHECK_THROWS_AS(make_psi(0), std::invalid_argument);

    const Graph phi23 = make_phi(2, 3);
    CHECK(phi23.vertex_count() == 7);
    CHECK(phi23.degree(0) == 3);
    CHECK(phi23.degree(1) == 4);
    CHECK_THROWS_AS(make_phi(1, 2), std::invalid_argument);

    CHECK(make_i().vertex_count() == 6);
    CHECK(degree_multiset(make_i()) == std::vector<int>{1, 1, 1, 1, 3, 3});
}

TEST_CASE("small family coincidences, up to isomorphism") {
    CHECK(oracles::graphs_isomorphic(make_psi(1), make_path(4)));
    CHECK(oracles::graphs_isomorphic(make_phi(2, 2), make_i()));
    CHECK(oracles::graphs_isomorphic(make_complete_bipartite(2, 2), make_cycle(4)));
}

TEST_CASE("add_vertex wires a fresh vertex; closing a path yields a cycle") {
    for (int n = 3; n <= 7; ++n) {
        const Graph closed = add_vertex(make_path(n), {0, n - 1});
        CHECK(oracles::graphs_isomorphic(closed, make_cycle(n + 1)));
    }
    CHECK_THROWS_AS(add_vertex(make_path(3), {}), std::invalid_argument);
    CHECK_THROWS_AS(add_vertex(make_path(3), {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(add_vertex(make_path(3), {3}), std::invalid_argument);
}

TEST_CASE("tree recognition and diameter") {
    CHECK(is_tree(make_path(6)));
    CHECK(is_tree(make_star(4)));
    CHECK(is_tree(make_psi(3)));
    CHECK(!is_tree(make_cycle(5)));
    CHECK(!is_tree(Graph(3, {{0, 1}}))); // disconnected

    CHECK(tree_diameter(make_path(7)) == 6);
    CHECK(tree_diameter(make_star(5)) == 2);
    CHECK(tree_diameter(make_psi(3)) == 3);
    CHECK(tree_diameter(make_phi(2, 2)) == 3);
    CHECK_THROWS_AS(tree_diameter(make_cycle(4)), std::invalid_argument);
}

TEST_CASE("tree containment shortcuts match the generic embedding oracle") {
    const Graph p5 = make_path(5);
    const Graph i = make_i();

    CHECK(contains_p5_subgraph(make_path(5)));
    CHECK(!contains_p5_subgraph(make_path(4)));
    CHECK(!contains_p5_subgraph(make_star(6)));
    CHECK(!contains_p5_subgraph(make_psi(4)));
    CHECK(contains_i_subgraph(make_phi(3, 2)));
    CHECK(!contains_i_subgraph(make_psi(4)));
    CHECK_THROWS_AS(contains_p5_subgraph(make_cycle(5)), std::invalid_argument);
    CHECK_THROWS_AS(contains_i_subgraph(make_cycle(5)), std::invalid_argument);

    for (int n = 4; n <= 8; ++n)
        for (const Graph& t : tree_isomorphism_classes(n)) {
            CAPTURE(n);
            CHECK(contains_p5_subgraph(t) == oracles::subgraph_embeds(p5, t));
            CHECK(contains_i_subgraph(t) == oracles::subgraph_embeds(i, t));
        }
}

TEST_CASE("spanning complete bipartite detection: known shapes") {
    for (auto [m, q] : {std::pair{1, 1}, {1, 4}, {2, 2}, {2, 3}, {3, 3}}) {
        auto bp = detect_spanning_complete_bipartite(make_complete_bipartite(m, q));
        REQUIRE(bp.has_value());
        CHECK(bp->part_a.size() + bp->part_b.size() == static_cast<std::size_t>(m + q));
    }
    CHECK(!detect_spanning_complete_bipartite(make_path(4)).has_value());
    CHECK(!detect_spanning_complete_bipartite(make_cycle(5)).has_value());
    CHECK(detect_spanning_complete_bipartite(make_cycle(4)).has_value());
    CHECK(detect_spanning_complete_bipartite(make_star(6)).has_value());
    CHECK_THROWS_AS(detect_spanning_complete_bipartite(Graph(1, {})), std::invalid_argument);
}

TEST_CASE("spanning complete bipartite detection agrees with exhaustive search") {
    auto check_one = [](const Graph& g) {
        auto bp = detect_spanning_complete_bipartite(g);
        CHECK(bp.has_value() == oracles::brute_has_spanning_complete_bipartite(g));
        if (bp) {
            // The returned split itself must be a genuine spanning complete
            // cross pattern.
            CHECK(!bp->part_a.empty());
            CHECK(!bp->part_b.empty());
            CHECK(bp->part_a.size() + bp->part_b.size() ==
                  static_cast<std::size_t>(g.vertex_count()));
            for (int u : bp->part_a)
                for (int v : bp->part_b) CHECK(g.adjacent(u, v));
        }
    };

    for (int n = 2; n <= 6; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask)
            check_one(graph_from_mask(n, mask));
    }

    std::mt19937 rng(20260815);
    std::uniform_int_distribution<std::uint64_t> dist(0, (1ull << 21) - 1);
    for (int trial = 0; trial < 4000; ++trial) check_one(graph_from_mask(7, dist(rng)));
}

TEST_CASE("chromatic number on known graphs") {
    CHECK(chromatic_number(make_path(1)) == 1);
    CHECK(chromatic_number(make_path(6)) == 2);
    CHECK(chromatic_number(make_cycle(6)) == 2);
    CHECK(chromatic_number(make_cycle(7)) == 3);
    CHECK(chromatic_number(make_complete_bipartite(3, 4)) == 2);
    CHECK(chromatic_number(make_i()) == 2);
    CHECK(chromatic_number(Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})) == 4);
    CHECK(chromatic_number(Graph(3, {})) == 1);
}
