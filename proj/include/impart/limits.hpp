#pragma once

namespace impart::limits {

// Largest graph the single-word bitset algorithms accept.
inline constexpr int kMaxBitsetVertices = 64;

// chromatic_number / is_k_partite: 2^n independent-set table.
inline constexpr int kMaxChromaticVertices = 30;

// independence_number branch and bound.
inline constexpr int kMaxIndependenceVertices = 64;

// chromatic_index backtracking search.
inline constexpr int kMaxChromaticIndexEdges = 64;

// treewidth / pathwidth subset dynamic programs.
inline constexpr int kMaxWidthVertices = 24;

// p_of_G_k: enumeration over all vertex subsets.
inline constexpr int kMaxSubsetEnumerationVertices = 18;

}  // namespace impart::limits
