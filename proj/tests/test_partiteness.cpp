#include <doctest.h>

#include <stdexcept>

#include "impart/io.hpp"
#include "impart/parameters.hpp"
#include "impart/partiteness.hpp"
#include "oracles.hpp"

using namespace impart;

namespace {

Graph cycle(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, edges);
}

Graph complete(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

}  // namespace

TEST_CASE("bipartiteness by depth-first search") {
    auto even = is_bipartite(cycle(4));
    REQUIRE(even);
    CHECK(even->valid_for(cycle(4)));
    CHECK(even->colors[0] != even->colors[1]);

    CHECK_FALSE(is_bipartite(cycle(5)));

    auto empty = is_bipartite(Graph(3, {}));
    REQUIRE(empty);
    CHECK(empty->colors == std::vector<int>{0, 0, 0});
}

TEST_CASE("chromatic number examples") {
    CHECK(chromatic_number(complete(4)) == 4);
    CHECK(chromatic_number(cycle(5)) == 3);
    CHECK(chromatic_number(Graph(0, {})) == 0);
    CHECK(chromatic_number(Graph(4, {})) == 1);

    Graph pet = oracles::petersen();
    CHECK(chromatic_number(pet) == 3);
    CHECK(oracles::brute_chromatic_number(pet) == 3);
}

TEST_CASE("k-partiteness with witnesses") {
    CHECK_FALSE(is_k_partite(cycle(5), 2));

    auto c5w = is_k_partite(cycle(5), 3);
    REQUIRE(c5w);
    CHECK(c5w->valid_for(cycle(5)));

    Graph k33 = complete_multipartite(3, 2).first;
    auto k33w = is_k_partite(k33, 2);
    REQUIRE(k33w);
    CHECK(k33w->valid_for(k33));

    CHECK_THROWS_AS(is_k_partite(cycle(4), 0), std::invalid_argument);
}

TEST_CASE("k-partite decision agrees with chromatic number, exhaustive small orders") {
    for (int n = 0; n <= 6; ++n) {
        oracles::all_graphs(n, [&](const Graph& g) {
            const int chi = oracles::brute_chromatic_number(g);
            for (int k = 1; k <= 4; ++k)
                CHECK(is_k_partite_decision(g, k) == (chi <= k));
        });
    }
}

TEST_CASE("witness recovery stays proper across small orders") {
    for (int n = 1; n <= 5; ++n) {
        oracles::all_graphs(n, [&](const Graph& g) {
            const int chi = oracles::brute_chromatic_number(g);
            auto w = is_k_partite(g, chi);
            REQUIRE(w);
            CHECK(w->valid_for(g));
            if (chi > 1) CHECK_FALSE(is_k_partite(g, chi - 1));
        });
    }
}

TEST_CASE("k-partite decision on random mid-size graphs") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const int n = 7 + static_cast<int>(seed % 6);
        Graph g = io::gen({.kind = "gnp", .n = n, .p = 0.45}, seed);
        const int chi = oracles::brute_chromatic_number(g);
        CHECK(chromatic_number(g) == chi);
        for (int k = 2; k <= 4; ++k) {
            auto w = is_k_partite(g, k);
            CHECK(w.has_value() == (chi <= k));
            if (w) CHECK(w->valid_for(g));
        }
        CHECK(is_bipartite(g).has_value() == is_k_partite(g, 2).has_value());
    }
}

TEST_CASE("coloring over a tree decomposition") {
    // Star K_{1,3} with its natural width-1 decomposition.
    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    TreeDecomposition td;
    td.bags = {VertexSet({0, 1}), VertexSet({0, 2}), VertexSet({0, 3})};
    td.tree_edges = {{0, 1}, {1, 2}};
    REQUIRE(validate_tree_decomposition(star, td));
    auto w = is_k_partite_via_decomposition(star, td, 2);
    REQUIRE(w);
    CHECK(w->valid_for(star));

    // C5 with a width-2 decomposition.
    Graph c5 = cycle(5);
    TreeDecomposition c5td;
    c5td.bags = {VertexSet({0, 1, 2}), VertexSet({0, 2, 3}), VertexSet({0, 3, 4})};
    c5td.tree_edges = {{0, 1}, {1, 2}};
    REQUIRE(validate_tree_decomposition(c5, c5td));
    CHECK_FALSE(is_k_partite_via_decomposition(c5, c5td, 2));
    auto c5w = is_k_partite_via_decomposition(c5, c5td, 3);
    REQUIRE(c5w);
    CHECK(c5w->valid_for(c5));

    // Invalid decomposition is rejected.
    TreeDecomposition bad;
    bad.bags = {VertexSet({0, 1})};
    CHECK_THROWS_AS(is_k_partite_via_decomposition(c5, bad, 3), std::invalid_argument);
}

TEST_CASE("decomposition DP agrees with the subset-count decision") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const int n = 4 + static_cast<int>(seed % 5);
        Graph g = io::gen({.kind = "gnp", .n = n, .p = 0.5}, seed);
        auto tw = treewidth(g);
        for (int k = 2; k <= 4; ++k) {
            auto via = is_k_partite_via_decomposition(g, tw.decomposition, k);
            CHECK(via.has_value() == is_k_partite_decision(g, k));
            if (via) CHECK(via->valid_for(g));
        }
    }
}

TEST_CASE("wide exponents fall back to the residue accumulation") {
    // Interleaved crown plus one edge: chi = 3 but first-fit burns 8 colors,
    // so the k=7 decision runs the inclusion-exclusion sum with 16*(7+1) bits
    // of magnitude, past the 128-bit window.
    std::vector<Edge> edges;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            if (i != j) edges.emplace_back(2 * i, 2 * j + 1);
    edges.emplace_back(0, 2);
    Graph crown(16, edges);
    CHECK(oracles::brute_chromatic_number(crown) == 3);
    CHECK(chromatic_number(crown) == 3);
    CHECK(is_k_partite_decision(crown, 7));

    Graph k16 = complete(16);
    CHECK_FALSE(is_k_partite_decision(k16, 8));
    CHECK_FALSE(is_k_partite_decision(k16, 15));
    CHECK(is_k_partite_decision(k16, 16));
}

TEST_CASE("chromatic number of complete multipartite graphs is the part count") {
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 4; ++k)
            CHECK(chromatic_number(complete_multipartite(n, k).first) == k);
}
