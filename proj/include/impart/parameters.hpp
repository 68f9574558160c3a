#pragma once

#include "impart/decomposition.hpp"
#include "impart/graph.hpp"

namespace impart {

// order and size are Graph::order() / Graph::size().

int min_degree(const Graph& g);  // throws std::invalid_argument on the empty graph
int max_degree(const Graph& g);

// Menger via vertex-split max-flow over non-adjacent pairs; kappa(K_n) = n-1,
// 0 for disconnected graphs.
int vertex_connectivity(const Graph& g);

// Min over s-t edge max-flows from a fixed root; 0 for disconnected graphs.
// Requires at least 2 vertices.
int edge_connectivity(const Graph& g);

struct StableSetResult {
    int value = 0;
    VertexSet witness;  // lexicographically smallest maximum stable set
};

// Branch and bound with a greedy clique-cover bound.
StableSetResult independence_number(const Graph& g);

// Exact chromatic index. Vizing pins the answer to max degree or max degree
// plus one; the search only decides between the two.
int chromatic_index(const Graph& g);

struct TreewidthResult {
    int width = 0;
    TreeDecomposition decomposition;
};

struct PathwidthResult {
    int width = 0;
    PathDecomposition decomposition;
};

// Exact treewidth by subset dynamic programming over elimination orders,
// with a witness decomposition of the reported width.
TreewidthResult treewidth(const Graph& g);

// Exact pathwidth via the vertex-separation subset DP, with a witness path
// decomposition of the reported width.
PathwidthResult pathwidth(const Graph& g);

}  // namespace impart
