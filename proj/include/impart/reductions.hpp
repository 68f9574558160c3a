#pragma once

#include <map>
#include <optional>
#include <string>

#include "impart/graph.hpp"
#include "impart/solvers.hpp"

namespace impart {

struct ReductionProvenance {
    std::string reduction;                          // "lex_product" or "tmd4"
    std::string source_graph6;                      // source graph, graph6 encoded
    std::map<std::string, long long> parameters;    // reduction arguments
};

struct ReductionOutput {
    Graph produced;
    ProblemInstance instance;
    std::optional<long long> threshold;  // f_k(m) for the lex-product reduction
    ReductionProvenance provenance;
};

// Maximum-stable-set to the maximize-then-threshold problem: produce
// G_k = K_k | G and the instance (G_k, p, k, ell = f_k(m)). alpha(G) <= m
// iff the produced instance answers yes. m = 0 is rejected: f_k is only
// defined on positive part sizes.
ReductionOutput mss_to_ikpsp(const Graph& g, int m, int k, ParameterId p);

// Checks p(G_k, k) == f_k(alpha(G)) by computing both sides independently.
bool verify_theorem1_identity(const Graph& g, int k, ParameterId p);

// Tripartite-max-degree-4 to the deletion problem with k=3, m=0 and the
// parameter-specific ell (4 for the degree and connectivity parameters, 5
// for chromatic index). Requires max degree at most 4.
ReductionOutput tmd4_to_large(const Graph& g, ParameterId p);

}  // namespace impart
