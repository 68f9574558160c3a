#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "impart/decomposition.hpp"
#include "impart/graph.hpp"

namespace impart {

struct ColoringWitness {
    std::vector<int> colors;  // one entry per vertex, each in 0..k-1
    int k = 0;

    bool valid_for(const Graph& g) const;
};

/// Shared 2^n independent-set-count table for a fixed graph. Answers
/// colorability queries for arbitrary vertex subsets of that graph via
/// inclusion-exclusion, so one table serves a whole subset enumeration.
class ColorabilityOracle {
  public:
    explicit ColorabilityOracle(const Graph& g);

    // chi(G[mask]) <= k
    bool chromatic_at_most(std::uint64_t mask, int k) const;
    int chromatic_number(std::uint64_t mask) const;

  private:
    const Graph* g_;
    int n_;
    std::vector<std::uint32_t> counts_;  // counts_[S] = independent sets inside S
};

// Two-coloring by depth-first search; absent when an odd cycle exists.
std::optional<ColoringWitness> is_bipartite(const Graph& g);

// Exact chi(G) by inclusion-exclusion over vertex subsets. 0 for the empty
// vertex set.
int chromatic_number(const Graph& g);

// Witness iff chi(G) <= k. Witness recovered by peeling color classes.
std::optional<ColoringWitness> is_k_partite(const Graph& g, int k);

// Decision only; skips witness recovery.
bool is_k_partite_decision(const Graph& g, int k);

// k-coloring dynamic programming over a valid tree decomposition of g.
// Throws std::invalid_argument when the decomposition is not valid for g.
std::optional<ColoringWitness> is_k_partite_via_decomposition(const Graph& g,
                                                              const TreeDecomposition& td, int k);

}  // namespace impart
