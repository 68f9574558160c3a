#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "impart/graph.hpp"

namespace impart {

/// The ten induced multipartite graph parameters.
enum class ParameterId {
    order,
    size,
    min_degree,
    max_degree,
    vertex_connectivity,
    edge_connectivity,
    independence_number,
    chromatic_index,
    treewidth,
    pathwidth,
};

inline constexpr std::array<ParameterId, 10> kAllParameters = {
    ParameterId::order,
    ParameterId::size,
    ParameterId::min_degree,
    ParameterId::max_degree,
    ParameterId::vertex_connectivity,
    ParameterId::edge_connectivity,
    ParameterId::independence_number,
    ParameterId::chromatic_index,
    ParameterId::treewidth,
    ParameterId::pathwidth,
};

std::string_view to_string(ParameterId p);
std::optional<ParameterId> parameter_from_string(std::string_view name);

// Closed-form value of each parameter on the complete k-partite graph with n
// vertices per part. Strictly increasing in n for every fixed k >= 2.
long long f_k(ParameterId p, int k, int n);

// Whether the parameter is defined on this graph (degree-like parameters need
// vertices, edge connectivity needs two).
bool parameter_defined_on(ParameterId p, const Graph& g);

// Dispatch to the exact computation in the parameters module.
long long evaluate_parameter(ParameterId p, const Graph& g);

struct PkResult {
    long long value = 0;
    VertexSet witness;  // first maximizing subset in ascending mask order
};

// p(G,k): maximum of the parameter over all induced k-partite subgraphs,
// by enumeration of all vertex subsets. Subsets on which the parameter is
// undefined are skipped. Throws std::invalid_argument when no subset defines
// the parameter at all.
PkResult p_of_G_k(const Graph& g, ParameterId p, int k);

// P1 sampling check on K_{n|k}: parameter of an induced subgraph never
// exceeds f_k(n). Exhaustive when kn <= 12, plus `trials` random subsets.
bool check_P1(ParameterId p, int n, int k, int trials, std::uint64_t seed = 0x1d6a09e667f3bccull);

// P2 check: f_k strictly increasing on 1..n_max and equal to the computed
// parameter on constructed K_{n|k} (skipping n beyond computation ceilings).
bool check_P2(ParameterId p, int k, int n_max);

}  // namespace impart
