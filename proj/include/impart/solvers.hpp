#pragma once

#include <optional>
#include <string_view>

#include "impart/decomposition.hpp"
#include "impart/graph.hpp"
#include "impart/imgp.hpp"

namespace impart {

struct ProblemInstance {
    Graph graph;
    ParameterId param = ParameterId::order;
    int k = 2;
    int ell = 0;
    std::optional<int> m;  // absent for the maximize-then-threshold problem
};

enum class EarlyExit {
    pigeonhole,        // |G| exceeds the k*ell+m or ell+m vertex bound
    width_exceeded,    // decomposition width above ell+m
    high_degree,       // more than m vertices of degree above ell+m
    edge_budget,       // shrunk graph still has more than t edges
};

std::string_view to_string(EarlyExit reason);

struct SolverTrace {
    std::optional<EarlyExit> early_exit_reason;
    std::optional<int> high_degree_count;      // s in the edges algorithm
    std::optional<long long> edge_budget;      // t = (ell+m)(m-s)+ell
    std::optional<VertexSet> bag;              // largest bag B used for candidates
    long long candidates_examined = 0;
};

struct Answer {
    bool verdict = false;
    std::optional<VertexSet> deleted;  // witness: H = G minus these vertices
    SolverTrace trace;
};

// Exact reference for the maximize-then-threshold problem: yes iff
// p(G,k) <= ell. Witness is the complement of a maximizing subset.
Answer ikpsp_decide(const Graph& g, ParameterId p, int k, int ell);

// Exact reference for the deletion problem: enumerate all S with |S| <= m in
// size-then-lexicographic order; yes on the first S whose remainder is
// k-partite with parameter at most ell.
Answer large_ikpsp_oracle(const Graph& g, ParameterId p, int k, int ell, int m);

// The four fixed-parameter routines, implemented as published.
Answer large_fpt_independence(const Graph& g, int k, int ell, int m);
Answer large_fpt_treewidth(const Graph& g, int k, int ell, int m,
                           const std::optional<TreeDecomposition>& supplied = std::nullopt);
Answer large_fpt_pathwidth(const Graph& g, int k, int ell, int m,
                           const std::optional<PathDecomposition>& supplied = std::nullopt);
Answer large_fpt_vertices(const Graph& g, int k, int ell, int m);
Answer large_fpt_edges(const Graph& g, int k, int ell, int m);

// alpha(G) <= m.
bool max_stable_set_decide(const Graph& g, int m);

// Independent recheck of a carried witness: k-partite remainder, parameter
// bound, size bound. Uses only the parameters and partiteness modules.
bool verify_answer(const Graph& g, const ProblemInstance& instance, const Answer& answer);

}  // namespace impart
