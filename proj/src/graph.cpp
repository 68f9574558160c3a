#include "impart/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace impart {

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
    std::vector<Vertex> members;
    while (mask) {
        int v = __builtin_ctzll(mask);
        members.push_back(v);
        mask &= mask - 1;
    }
    VertexSet s;
    s.members_ = std::move(members);
    return s;
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

std::uint64_t VertexSet::mask() const {
    std::uint64_t m = 0;
    for (Vertex v : members_) {
        if (v < 0 || v >= 64) throw std::invalid_argument("VertexSet::mask: member out of word range");
        m |= std::uint64_t{1} << v;
    }
    return m;
}

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("Graph: endpoint out of range");
        if (u > v) std::swap(u, v);
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

    if (n_ <= 64) {
        masks_.assign(n_, 0);
        for (auto [u, v] : edges_) {
            masks_[u] |= std::uint64_t{1} << v;
            masks_[v] |= std::uint64_t{1} << u;
        }
    }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::uint64_t Graph::full_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    std::vector<int> new_id(g.order(), -1);
    int next = 0;
    for (Vertex v : s.members()) {
        if (v < 0 || v >= g.order())
            throw std::invalid_argument("induced_subgraph: member out of range");
        new_id[v] = next++;
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (new_id[u] >= 0 && new_id[v] >= 0) edges.emplace_back(new_id[u], new_id[v]);
    return Graph(s.size(), edges);
}

Graph delete_vertices(const Graph& g, const VertexSet& s) {
    std::vector<Vertex> keep;
    std::vector<char> drop(g.order(), 0);
    for (Vertex v : s.members()) {
        if (v < 0 || v >= g.order())
            throw std::invalid_argument("delete_vertices: member out of range");
        drop[v] = 1;
    }
    for (Vertex v = 0; v < g.order(); ++v)
        if (!drop[v]) keep.push_back(v);
    return induced_subgraph(g, VertexSet(std::move(keep)));
}

std::pair<Graph, Partition> complete_multipartite(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("complete_multipartite: n and k must be positive");
    std::vector<Edge> edges;
    for (int u = 0; u < k * n; ++u)
        for (int v = u + 1; v < k * n; ++v)
            if (u / n != v / n) edges.emplace_back(u, v);
    Partition parts;
    for (int i = 0; i < k; ++i) {
        std::vector<Vertex> part;
        for (int j = 0; j < n; ++j) part.push_back(i * n + j);
        parts.parts.emplace_back(std::move(part));
    }
    return {Graph(k * n, edges), std::move(parts)};
}

std::pair<Graph, std::vector<VertexSet>> lex_product_with_complete(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("lex_product_with_complete: k must be at least 2");
    const int n = g.order();
    std::vector<Edge> edges;
    for (int copy = 0; copy < k; ++copy)
        for (auto [u, v] : g.edges()) edges.emplace_back(copy * n + u, copy * n + v);
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) edges.emplace_back(a * n + u, b * n + v);
    std::vector<VertexSet> blocks;
    for (int copy = 0; copy < k; ++copy) {
        std::vector<Vertex> block;
        for (int v = 0; v < n; ++v) block.push_back(copy * n + v);
        blocks.emplace_back(std::move(block));
    }
    return {Graph(k * n, edges), std::move(blocks)};
}

bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    std::vector<char> seen(g.order(), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == g.order();
}

}  // namespace impart
