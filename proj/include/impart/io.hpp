#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "impart/graph.hpp"

namespace impart::io {

// "n m" header line, then m lines "u v" with 0-based ids.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

// Standard graph6: 6-bit packed upper triangle, offset 63. Supports the
// one-byte header (n <= 62) and the '~' three-byte form.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

struct GenSpec {
    std::string kind;      // gnp | cycle | path | complete | complete_multipartite | max_degree4
    int n = 0;
    int k = 0;             // complete_multipartite only
    double p = 0.5;        // gnp only
    int edge_budget = -1;  // max_degree4 only; defaults to 2n
};

// Seeded deterministic generation; the max_degree4 kind guarantees maximum
// degree at most 4 by construction.
Graph gen(const GenSpec& spec, std::uint64_t seed);

}  // namespace impart::io
