#include "impart/decomposition.hpp"

#include <algorithm>

namespace impart {

int TreeDecomposition::width() const {
    int largest = 0;
    for (const auto& b : bags) largest = std::max(largest, b.size());
    return largest - 1;
}

int PathDecomposition::width() const {
    int largest = 0;
    for (const auto& b : bags) largest = std::max(largest, b.size());
    return largest - 1;
}

TreeDecomposition PathDecomposition::as_tree() const {
    TreeDecomposition td;
    td.bags = bags;
    for (int i = 0; i + 1 < static_cast<int>(bags.size()); ++i)
        td.tree_edges.emplace_back(i, i + 1);
    return td;
}

namespace {

bool is_tree(int nodes, const std::vector<std::pair<int, int>>& edges) {
    if (nodes == 0) return edges.empty();
    if (static_cast<int>(edges.size()) != nodes - 1) return false;
    std::vector<std::vector<int>> adj(nodes);
    for (auto [a, b] : edges) {
        if (a < 0 || a >= nodes || b < 0 || b >= nodes || a == b) return false;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> seen(nodes, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == nodes;
}

// Occurrence sets of every vertex must induce connected subtrees.
bool occurrences_connected(const Graph& g, const std::vector<VertexSet>& bags,
                           const std::vector<std::pair<int, int>>& edges) {
    const int nodes = static_cast<int>(bags.size());
    std::vector<std::vector<int>> adj(nodes);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        std::vector<char> holds(nodes, 0);
        int count = 0, start = -1;
        for (int i = 0; i < nodes; ++i)
            if (bags[i].contains(v)) {
                holds[i] = 1;
                ++count;
                start = i;
            }
        if (count == 0) return false;  // vertex coverage
        std::vector<char> seen(nodes, 0);
        std::vector<int> stack{start};
        seen[start] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            for (int b : adj[a])
                if (holds[b] && !seen[b]) {
                    seen[b] = 1;
                    ++reached;
                    stack.push_back(b);
                }
        }
        if (reached != count) return false;
    }
    return true;
}

bool edges_covered(const Graph& g, const std::vector<VertexSet>& bags) {
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (const auto& b : bags)
            if (b.contains(u) && b.contains(v)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

bool bags_in_range(const Graph& g, const std::vector<VertexSet>& bags) {
    for (const auto& b : bags)
        for (Vertex v : b.members())
            if (v < 0 || v >= g.order()) return false;
    return true;
}

}  // namespace

bool validate_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
    if (!is_tree(static_cast<int>(td.bags.size()), td.tree_edges)) return false;
    if (!bags_in_range(g, td.bags)) return false;
    if (!occurrences_connected(g, td.bags, td.tree_edges)) return false;
    return edges_covered(g, td.bags);
}

bool validate_path_decomposition(const Graph& g, const PathDecomposition& pd) {
    if (!bags_in_range(g, pd.bags)) return false;
    const int nodes = static_cast<int>(pd.bags.size());
    for (Vertex v = 0; v < g.order(); ++v) {
        int first = -1, last = -1, count = 0;
        for (int i = 0; i < nodes; ++i)
            if (pd.bags[i].contains(v)) {
                if (first < 0) first = i;
                last = i;
                ++count;
            }
        if (count == 0) return false;
        if (last - first + 1 != count) return false;  // consecutiveness
    }
    return edges_covered(g, pd.bags);
}

}  // namespace impart
