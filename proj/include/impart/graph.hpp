#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace impart {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted duplicate-free set of vertex ids.
class VertexSet {
  public:
    VertexSet() = default;
    explicit VertexSet(std::vector<Vertex> members);
    static VertexSet from_mask(std::uint64_t mask);

    const std::vector<Vertex>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }
    bool contains(Vertex v) const;

    // All members must be < 64.
    std::uint64_t mask() const;

    bool operator==(const VertexSet&) const = default;

  private:
    std::vector<Vertex> members_;
};

/// Immutable simple undirected graph with vertex ids 0..n-1.
class Graph {
  public:
    Graph() = default;
    // Normalizes pairs to u<v and collapses duplicates. Throws
    // std::invalid_argument on self-loops or out-of-range endpoints.
    Graph(int n, const std::vector<Edge>& edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(Vertex u, Vertex v) const;

    bool fits_in_word() const { return n_ <= 64; }
    // Neighborhood as a bit mask; only available when order() <= 64.
    std::uint64_t neighbor_mask(Vertex v) const { return masks_[v]; }
    std::uint64_t full_mask() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::uint64_t> masks_;
};

struct Partition {
    std::vector<VertexSet> parts;
};

// Vertices of S relabeled 0..|S|-1 in ascending order of original id.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

// Equals induced_subgraph(g, V \ s).
Graph delete_vertices(const Graph& g, const VertexSet& s);

// K_{n|k}: k parts of n vertices each, vertex v in part v/n, edges between
// distinct parts. Returns the part structure as a witness.
std::pair<Graph, Partition> complete_multipartite(int n, int k);

// K_k | G: k disjoint copies of g plus all edges between distinct copies.
// Returns the copy blocks.
std::pair<Graph, std::vector<VertexSet>> lex_product_with_complete(const Graph& g, int k);

bool is_connected(const Graph& g);

}  // namespace impart
