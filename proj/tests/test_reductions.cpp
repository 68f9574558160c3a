#include <doctest.h>

#include <stdexcept>

#include "impart/io.hpp"
#include "impart/parameters.hpp"
#include "impart/partiteness.hpp"
#include "impart/reductions.hpp"
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

Graph p3() { return Graph(3, {{0, 1}, {1, 2}}); }

}  // namespace

TEST_CASE("stable-set reduction construction") {
    auto out = mss_to_ikpsp(p3(), 2, 2, ParameterId::independence_number);
    CHECK(out.threshold == 2);
    CHECK(out.produced.order() == 6);
    CHECK(out.instance.k == 2);
    CHECK(out.instance.ell == 2);
    CHECK_FALSE(out.instance.m.has_value());
    CHECK(out.provenance.reduction == "lex_product");
    CHECK(out.provenance.source_graph6 == io::emit_graph6(p3()));
    CHECK(out.provenance.parameters.at("m") == 2);

    // alpha(P3) = 2 <= 2 and the produced instance answers yes.
    CHECK(max_stable_set_decide(p3(), 2));
    CHECK(ikpsp_decide(out.produced, out.instance.param, out.instance.k, out.instance.ell).verdict);

    auto k3 = mss_to_ikpsp(complete(3), 1, 2, ParameterId::order);
    CHECK(k3.threshold == 2);
    CHECK(max_stable_set_decide(complete(3), 1));
    CHECK(ikpsp_decide(k3.produced, ParameterId::order, 2, 2).verdict);

    // Canonical small no-case.
    auto no = mss_to_ikpsp(p3(), 1, 2, ParameterId::independence_number);
    CHECK(no.threshold == 1);
    CHECK_FALSE(max_stable_set_decide(p3(), 1));
    CHECK_FALSE(ikpsp_decide(no.produced, ParameterId::independence_number, 2, 1).verdict);

    CHECK_THROWS_AS(mss_to_ikpsp(p3(), 0, 2, ParameterId::order), std::invalid_argument);
    CHECK_THROWS_AS(mss_to_ikpsp(p3(), 1, 1, ParameterId::order), std::invalid_argument);
}

TEST_CASE("identity p(G_k,k) = f_k(alpha(G))") {
    CHECK(verify_theorem1_identity(complete(2), 2, ParameterId::order));
    CHECK(verify_theorem1_identity(Graph(2, {}), 2, ParameterId::independence_number));
    CHECK(verify_theorem1_identity(p3(), 2, ParameterId::treewidth));
    CHECK_THROWS_AS(verify_theorem1_identity(Graph(0, {}), 2, ParameterId::order),
                    std::invalid_argument);
}

TEST_CASE("identity across all parameters on tiny graphs") {
    oracles::all_graphs(3, [&](const Graph& g) {
        for (ParameterId p : kAllParameters) CHECK(verify_theorem1_identity(g, 2, p));
    });
}

TEST_CASE("stable-set reduction biconditional on a small corpus") {
    oracles::all_graphs(3, [&](const Graph& g) {
        for (ParameterId p : {ParameterId::order, ParameterId::independence_number})
            for (int m = 1; m <= 3; ++m) {
                auto out = mss_to_ikpsp(g, m, 2, p);
                CHECK(max_stable_set_decide(g, m) ==
                      ikpsp_decide(out.produced, p, 2, out.instance.ell).verdict);
            }
    });
}

TEST_CASE("tripartite max-degree-4 reduction") {
    auto c5 = tmd4_to_large(cycle(5), ParameterId::max_degree);
    CHECK(c5.instance.k == 3);
    CHECK(c5.instance.ell == 4);
    CHECK(c5.instance.m == 0);
    CHECK_FALSE(c5.threshold.has_value());
    CHECK(large_ikpsp_oracle(c5.produced, ParameterId::max_degree, 3, 4, 0).verdict);

    auto k5 = tmd4_to_large(complete(5), ParameterId::chromatic_index);
    CHECK(k5.instance.ell == 5);
    CHECK(chromatic_number(complete(5)) == 5);
    CHECK_FALSE(large_ikpsp_oracle(k5.produced, ParameterId::chromatic_index, 3, 5, 0).verdict);

    auto k4 = tmd4_to_large(complete(4), ParameterId::min_degree);
    CHECK(k4.instance.ell == 4);
    CHECK_FALSE(large_ikpsp_oracle(k4.produced, ParameterId::min_degree, 3, 4, 0).verdict);

    CHECK_THROWS_AS(tmd4_to_large(complete(6), ParameterId::max_degree), std::invalid_argument);
    CHECK_THROWS_AS(tmd4_to_large(cycle(5), ParameterId::order), std::invalid_argument);
}

TEST_CASE("reduction ell table per parameter") {
    for (ParameterId p : {ParameterId::min_degree, ParameterId::max_degree,
                          ParameterId::vertex_connectivity, ParameterId::edge_connectivity})
        CHECK(tmd4_to_large(cycle(4), p).instance.ell == 4);
    CHECK(tmd4_to_large(cycle(4), ParameterId::chromatic_index).instance.ell == 5);
}
