#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <vector>

namespace impart::oracles {

namespace {

using u64 = std::uint64_t;

u64 bit(int v) { return u64{1} << v; }

bool try_color(const Graph& g, std::vector<int>& colors, int v, int k) {
    if (v == g.order()) return true;
    for (int c = 0; c < k; ++c) {
        bool clash = false;
        for (Vertex w : g.neighbors(v))
            if (w < v && colors[w] == c) {
                clash = true;
                break;
            }
        if (clash) continue;
        colors[v] = c;
        if (try_color(g, colors, v + 1, k)) return true;
    }
    colors[v] = -1;
    return false;
}

}  // namespace

int brute_alpha(const Graph& g) {
    const int n = g.order();
    std::vector<u64> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbor_mask(v);
    int best = 0;
    for (u64 s = 0; s < (u64{1} << n); ++s) {
        bool stable = true;
        for (u64 it = s; it && stable; it &= it - 1)
            if (adj[std::countr_zero(it)] & s) stable = false;
        if (stable) best = std::max(best, std::popcount(s));
    }
    return best;
}

int brute_treewidth(const Graph& g) {
    const int n = g.order();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    int best = n;
    do {
        std::vector<u64> adj(n);
        for (int v = 0; v < n; ++v) adj[v] = g.neighbor_mask(v);
        u64 remaining = g.full_mask();
        int worst = 0;
        for (int v : order) {
            remaining &= ~bit(v);
            u64 nb = adj[v] & remaining;
            worst = std::max(worst, std::popcount(nb));
            for (u64 it = nb; it; it &= it - 1) adj[std::countr_zero(it)] |= nb;
            for (u64 it = nb; it; it &= it - 1) {
                int w = std::countr_zero(it);
                adj[w] &= ~bit(w);
            }
            if (worst >= best) break;
        }
        best = std::min(best, worst);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

int brute_pathwidth(const Graph& g) {
    const int n = g.order();
    std::vector<u64> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbor_mask(v);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    int best = n;
    do {
        u64 placed = 0;
        int worst = 0;
        for (int v : order) {
            placed |= bit(v);
            int boundary = 0;
            for (u64 it = placed; it; it &= it - 1)
                if (adj[std::countr_zero(it)] & ~placed) ++boundary;
            worst = std::max(worst, boundary);
            if (worst >= best) break;
        }
        best = std::min(best, worst);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

int brute_chromatic_number(const Graph& g) {
    if (g.order() == 0) return 0;
    for (int k = 1;; ++k) {
        std::vector<int> colors(g.order(), -1);
        if (try_color(g, colors, 0, k)) return k;
    }
}

Graph line_graph(const Graph& g) {
    const auto& edges = g.edges();
    std::vector<Edge> meta;
    for (size_t a = 0; a < edges.size(); ++a)
        for (size_t b = a + 1; b < edges.size(); ++b) {
            const auto& [u1, v1] = edges[a];
            const auto& [u2, v2] = edges[b];
            if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2)
                meta.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    return Graph(static_cast<int>(edges.size()), meta);
}

int brute_chromatic_index(const Graph& g) {
    if (g.size() == 0) return 0;
    return brute_chromatic_number(line_graph(g));
}

Graph petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, edges);
}

void all_graphs(int n, const std::function<void(const Graph&)>& visit) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    const u64 total = u64{1} << pairs.size();
    for (u64 mask = 0; mask < total; ++mask) {
        std::vector<Edge> edges;
        for (size_t i = 0; i < pairs.size(); ++i)
            if (mask & bit(static_cast<int>(i))) edges.push_back(pairs[i]);
        visit(Graph(n, edges));
    }
}

}  // namespace impart::oracles
