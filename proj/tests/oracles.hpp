#pragma once

// Brute-force reference routes for the test suites. These deliberately take
// different algorithmic paths from the library: subset scans, exhaustive
// elimination orders, and backtracking coloring.

#include <cstdint>
#include <functional>

#include "impart/graph.hpp"

namespace impart::oracles {

// Largest subset spanning no edges, by scanning all 2^n subsets.
int brute_alpha(const Graph& g);

// Min over all n! elimination orders of the max elimination degree in the
// fill graph.
int brute_treewidth(const Graph& g);

// Min over all n! vertex orders of the max prefix boundary.
int brute_pathwidth(const Graph& g);

// Smallest k admitting a proper coloring, by backtracking.
int brute_chromatic_number(const Graph& g);

// Chromatic number of the line graph.
int brute_chromatic_index(const Graph& g);

Graph line_graph(const Graph& g);

Graph petersen();

// All labeled graphs on n vertices (one per edge subset).
void all_graphs(int n, const std::function<void(const Graph&)>& visit);

}  // namespace impart::oracles
