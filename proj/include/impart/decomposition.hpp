#pragma once

#include "impart/graph.hpp"

namespace impart {

/// Tree of bags. Nodes are 0..bags.size()-1; tree_edges form the tree.
struct TreeDecomposition {
    std::vector<VertexSet> bags;
    std::vector<std::pair<int, int>> tree_edges;

    // Largest bag size minus one; -1 when there are no bags.
    int width() const;
};

/// Bags ordered along a path.
struct PathDecomposition {
    std::vector<VertexSet> bags;

    int width() const;
    TreeDecomposition as_tree() const;
};

// The three defining properties: every vertex covered, per-vertex occurrence
// set connected in the tree, every edge inside some bag. Also requires the
// node graph to actually be a tree.
bool validate_tree_decomposition(const Graph& g, const TreeDecomposition& td);

// Same checks with connectivity specialized to consecutive occurrence.
bool validate_path_decomposition(const Graph& g, const PathDecomposition& pd);

}  // namespace impart
