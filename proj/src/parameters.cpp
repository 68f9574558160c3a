#include "impart/parameters.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>
#include <stdexcept>

#include "impart/errors.hpp"
#include "impart/limits.hpp"
#include "impart/partiteness.hpp"

namespace impart {

namespace {

using u64 = std::uint64_t;

u64 bit(int v) { return u64{1} << v; }

// ---------------------------------------------------------------- max flow

// Edmonds-Karp on a small directed network with unit-ish capacities.
class FlowNetwork {
  public:
    explicit FlowNetwork(int nodes) : head_(nodes, -1) {}

    void add_arc(int from, int to, int capacity) {
        arcs_.push_back({to, head_[from], capacity});
        head_[from] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, head_[to], 0});
        head_[to] = static_cast<int>(arcs_.size()) - 1;
    }

    int max_flow(int source, int sink) {
        int total = 0;
        while (true) {
            std::vector<int> via(head_.size(), -1);
            std::queue<int> queue;
            queue.push(source);
            via[source] = -2;
            while (!queue.empty() && via[sink] == -1) {
                int v = queue.front();
                queue.pop();
                for (int a = head_[v]; a != -1; a = arcs_[a].next) {
                    if (arcs_[a].capacity > 0 && via[arcs_[a].to] == -1) {
                        via[arcs_[a].to] = a;
                        queue.push(arcs_[a].to);
                    }
                }
            }
            if (via[sink] == -1) return total;
            int bottleneck = std::numeric_limits<int>::max();
            for (int v = sink; v != source;) {
                int a = via[v];
                bottleneck = std::min(bottleneck, arcs_[a].capacity);
                v = arcs_[a ^ 1].to;
            }
            for (int v = sink; v != source;) {
                int a = via[v];
                arcs_[a].capacity -= bottleneck;
                arcs_[a ^ 1].capacity += bottleneck;
                v = arcs_[a ^ 1].to;
            }
            total += bottleneck;
        }
    }

  private:
    struct Arc {
        int to;
        int next;
        int capacity;
    };
    std::vector<int> head_;
    std::vector<Arc> arcs_;
};

// Max number of internally vertex-disjoint u-v paths, u,v non-adjacent.
int vertex_flow(const Graph& g, Vertex s, Vertex t) {
    const int n = g.order();
    const int big = n + 1;
    FlowNetwork net(2 * n);
    for (Vertex v = 0; v < n; ++v) net.add_arc(2 * v, 2 * v + 1, v == s || v == t ? big : 1);
    for (auto [u, v] : g.edges()) {
        net.add_arc(2 * u + 1, 2 * v, big);
        net.add_arc(2 * v + 1, 2 * u, big);
    }
    return net.max_flow(2 * s + 1, 2 * t);
}

int edge_flow(const Graph& g, Vertex s, Vertex t) {
    FlowNetwork net(g.order());
    for (auto [u, v] : g.edges()) {
        net.add_arc(u, v, 1);
        net.add_arc(v, u, 1);
    }
    return net.max_flow(s, t);
}

// ------------------------------------------------- independence machinery

class StableSetSolver {
  public:
    explicit StableSetSolver(const Graph& g) : n_(g.order()) {
        closed_.resize(n_);
        open_.resize(n_);
        for (Vertex v = 0; v < n_; ++v) {
            open_[v] = g.neighbor_mask(v);
            closed_[v] = open_[v] | bit(v);
        }
    }

    int alpha(u64 candidates) {
        best_ = 0;
        search(candidates, 0);
        return best_;
    }

  private:
    // Greedy clique cover of the candidate set; admissible upper bound.
    int clique_cover_bound(u64 candidates) const {
        int cliques = 0;
        while (candidates) {
            int v = std::countr_zero(candidates);
            u64 clique = bit(v);
            u64 common = candidates & open_[v];
            while (common) {
                int w = std::countr_zero(common);
                clique |= bit(w);
                common &= open_[w];
            }
            candidates &= ~clique;
            ++cliques;
        }
        return cliques;
    }

    void search(u64 candidates, int current) {
        if (candidates == 0) {
            best_ = std::max(best_, current);
            return;
        }
        if (current + clique_cover_bound(candidates) <= best_) return;
        // Branch on a candidate of maximum residual degree.
        int pick = -1, degree = -1;
        for (u64 it = candidates; it; it &= it - 1) {
            int v = std::countr_zero(it);
            int d = std::popcount(open_[v] & candidates);
            if (d > degree) {
                degree = d;
                pick = v;
            }
        }
        search(candidates & ~closed_[pick], current + 1);
        search(candidates & ~bit(pick), current);
    }

    int n_;
    std::vector<u64> open_, closed_;
    int best_ = 0;
};

// ------------------------------------------------------------ edge coloring

class EdgeColoringSearch {
  public:
    EdgeColoringSearch(const Graph& g, int colors) : g_(&g), colors_(colors) {
        edges_ = g.edges();
        assignment_.assign(edges_.size(), -1);
        used_.assign(g.order(), 0);
    }

    // Any proper coloring can be renamed so the edges at a fixed max-degree
    // vertex take colors 0,1,... in edge order; seeding them prunes the
    // color-permutation symmetry.
    bool run() {
        int anchor = -1;
        for (Vertex v = 0; v < g_->order(); ++v)
            if (anchor < 0 || g_->degree(v) > g_->degree(anchor)) anchor = v;
        int next = 0;
        for (size_t e = 0; e < edges_.size() && anchor >= 0; ++e) {
            if (edges_[e].first == anchor || edges_[e].second == anchor) {
                if (next >= colors_) return false;
                assign(e, next++);
            }
        }
        return extend();
    }

  private:
    void assign(size_t e, int c) {
        assignment_[e] = c;
        used_[edges_[e].first] |= bit(c);
        used_[edges_[e].second] |= bit(c);
    }

    void unassign(size_t e) {
        int c = assignment_[e];
        assignment_[e] = -1;
        used_[edges_[e].first] &= ~bit(c);
        used_[edges_[e].second] &= ~bit(c);
    }

    bool extend() {
        // Most-constrained edge first.
        int pick = -1, fewest = std::numeric_limits<int>::max();
        const u64 all = colors_ == 64 ? ~u64{0} : (u64{1} << colors_) - 1;
        for (size_t e = 0; e < edges_.size(); ++e) {
            if (assignment_[e] >= 0) continue;
            u64 avail = all & ~used_[edges_[e].first] & ~used_[edges_[e].second];
            int count = std::popcount(avail);
            if (count == 0) return false;
            if (count < fewest) {
                fewest = count;
                pick = static_cast<int>(e);
            }
        }
        if (pick < 0) return true;
        u64 avail = all & ~used_[edges_[pick].first] & ~used_[edges_[pick].second];
        for (u64 it = avail; it; it &= it - 1) {
            assign(pick, std::countr_zero(it));
            if (extend()) return true;
            unassign(pick);
        }
        return false;
    }

    const Graph* g_;
    int colors_;
    std::vector<Edge> edges_;
    std::vector<int> assignment_;
    std::vector<u64> used_;  // colors present at each vertex
};

// --------------------------------------------------------- width machinery

// Vertices outside S u {v} connected to v by a path with all internal
// vertices in S.
u64 reach_outside(const std::vector<u64>& adj, u64 s, Vertex v) {
    u64 component = 0;
    u64 reach = adj[v];
    u64 grow = reach & s & ~component;
    while (grow) {
        component |= grow;
        u64 acc = 0;
        for (u64 it = grow; it; it &= it - 1) acc |= adj[std::countr_zero(it)];
        reach |= acc;
        grow = reach & s & ~component;
    }
    return reach & ~s & ~bit(v);
}

int boundary_size(const std::vector<u64>& adj, u64 s) {
    int count = 0;
    for (u64 it = s; it; it &= it - 1)
        if (adj[std::countr_zero(it)] & ~s) ++count;
    return count;
}

std::vector<u64> adjacency_masks(const Graph& g) {
    std::vector<u64> adj(g.order());
    for (Vertex v = 0; v < g.order(); ++v) adj[v] = g.neighbor_mask(v);
    return adj;
}

}  // namespace

int min_degree(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("min_degree: empty graph");
    int d = std::numeric_limits<int>::max();
    for (Vertex v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
    return d;
}

int max_degree(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("max_degree: empty graph");
    int d = 0;
    for (Vertex v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
    return d;
}

int vertex_connectivity(const Graph& g) {
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("vertex_connectivity: empty graph");
    int best = n - 1;  // complete graph convention
    bool has_nonadjacent = false;
    for (Vertex s = 0; s < n; ++s)
        for (Vertex t = s + 1; t < n; ++t) {
            if (g.adjacent(s, t)) continue;
            has_nonadjacent = true;
            best = std::min(best, vertex_flow(g, s, t));
            if (best == 0) return 0;
        }
    return has_nonadjacent ? best : n - 1;
}

int edge_connectivity(const Graph& g) {
    const int n = g.order();
    if (n < 2) throw std::invalid_argument("edge_connectivity: fewer than 2 vertices");
    int best = std::numeric_limits<int>::max();
    for (Vertex t = 1; t < n; ++t) {
        best = std::min(best, edge_flow(g, 0, t));
        if (best == 0) return 0;
    }
    return best;
}

StableSetResult independence_number(const Graph& g) {
    const int n = g.order();
    if (n > limits::kMaxIndependenceVertices)
        throw CeilingError("independence_number: graph exceeds ceiling");
    if (n == 0) return {0, VertexSet{}};
    StableSetSolver solver(g);
    const u64 all = g.full_mask();
    const int alpha = solver.alpha(all);

    // Lexicographically smallest witness by greedy feasibility queries.
    std::vector<Vertex> witness;
    u64 candidates = all;
    int have = 0;
    for (Vertex v = 0; v < n && have < alpha; ++v) {
        if (!(candidates & bit(v))) continue;
        u64 rest = candidates & ~(g.neighbor_mask(v) | bit(v)) & ~(bit(v) - 1);
        if (have + 1 + solver.alpha(rest) == alpha) {
            witness.push_back(v);
            ++have;
            candidates = rest;
        } else {
            candidates &= ~bit(v);
        }
    }
    return {alpha, VertexSet(std::move(witness))};
}

int chromatic_index(const Graph& g) {
    if (g.size() == 0) return 0;
    if (g.size() > limits::kMaxChromaticIndexEdges)
        throw CeilingError("chromatic_index: graph exceeds edge ceiling");
    const int delta = max_degree(g);
    if (is_bipartite(g)) return delta;  // Koenig
    // Each color class is a matching of at most floor(n/2) edges.
    if (static_cast<long long>(g.size()) > static_cast<long long>(delta) * (g.order() / 2))
        return delta + 1;
    return EdgeColoringSearch(g, delta).run() ? delta : delta + 1;
}

TreewidthResult treewidth(const Graph& g) {
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("treewidth: empty graph");
    if (n > limits::kMaxWidthVertices) throw CeilingError("treewidth: graph exceeds ceiling");
    const auto adj = adjacency_masks(g);

    // dp[S] = best over orders eliminating exactly S first of the max
    // elimination cost; cost of eliminating v after S is |reach_outside(S,v)|.
    std::vector<std::uint8_t> dp(u64{1} << n, 0);
    for (u64 s = 1; s < dp.size(); ++s) {
        int best = std::numeric_limits<int>::max();
        for (u64 it = s; it; it &= it - 1) {
            int v = std::countr_zero(it);
            u64 rest = s & ~bit(v);
            int cost = std::max<int>(dp[rest], std::popcount(reach_outside(adj, rest, v)));
            best = std::min(best, cost);
        }
        dp[s] = static_cast<std::uint8_t>(best);
    }
    const int width = dp[dp.size() - 1];

    // Recover an elimination order; ties resolved toward the smallest vertex.
    std::vector<Vertex> order(n);
    u64 s = g.full_mask();
    for (int pos = n - 1; pos >= 0; --pos) {
        int chosen = -1;
        for (u64 it = s; it; it &= it - 1) {
            int v = std::countr_zero(it);
            u64 rest = s & ~bit(v);
            int cost = std::max<int>(dp[rest], std::popcount(reach_outside(adj, rest, v)));
            if (cost == dp[s]) {
                chosen = v;
                break;
            }
        }
        order[pos] = chosen;
        s &= ~bit(chosen);
    }

    // Bags along the order; each bag hangs off the bag of the first-eliminated
    // vertex it still sees.
    TreeDecomposition td;
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) position[order[i]] = i;
    std::vector<u64> qs(n);
    u64 eliminated = 0;
    for (int i = 0; i < n; ++i) {
        qs[i] = reach_outside(adj, eliminated, order[i]);
        td.bags.push_back(VertexSet::from_mask(qs[i] | bit(order[i])));
        eliminated |= bit(order[i]);
    }
    for (int i = 0; i < n; ++i) {
        if (qs[i]) {
            int parent_pos = n;
            for (u64 it = qs[i]; it; it &= it - 1)
                parent_pos = std::min(parent_pos, position[std::countr_zero(it)]);
            td.tree_edges.emplace_back(i, parent_pos);
        } else if (i + 1 < n) {
            td.tree_edges.emplace_back(i, i + 1);
        }
    }
    return {width, std::move(td)};
}

PathwidthResult pathwidth(const Graph& g) {
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("pathwidth: empty graph");
    if (n > limits::kMaxWidthVertices) throw CeilingError("pathwidth: graph exceeds ceiling");
    const auto adj = adjacency_masks(g);

    // Vertex separation: dp[S] = best over orders placing S first of the max
    // boundary over prefixes.
    std::vector<std::uint8_t> dp(u64{1} << n, 0);
    for (u64 s = 1; s < dp.size(); ++s) {
        int best = std::numeric_limits<int>::max();
        for (u64 it = s; it; it &= it - 1) {
            int v = std::countr_zero(it);
            best = std::min<int>(best, dp[s & ~bit(v)]);
        }
        dp[s] = static_cast<std::uint8_t>(std::max(best, boundary_size(adj, s)));
    }
    const int width = dp[dp.size() - 1];

    std::vector<Vertex> order(n);
    u64 s = g.full_mask();
    for (int pos = n - 1; pos >= 0; --pos) {
        int chosen = -1;
        for (u64 it = s; it; it &= it - 1) {
            int v = std::countr_zero(it);
            if (std::max<int>(dp[s & ~bit(v)], boundary_size(adj, s)) == dp[s]) {
                chosen = v;
                break;
            }
        }
        order[pos] = chosen;
        s &= ~bit(chosen);
    }

    // Bag i = boundary of the first i-1 placed vertices plus the i-th.
    PathwidthResult result;
    result.width = width;
    u64 placed = 0;
    for (int i = 0; i < n; ++i) {
        u64 boundary = 0;
        for (u64 it = placed; it; it &= it - 1) {
            int v = std::countr_zero(it);
            if (adj[v] & ~placed) boundary |= bit(v);
        }
        result.decomposition.bags.push_back(VertexSet::from_mask(boundary | bit(order[i])));
        placed |= bit(order[i]);
    }
    return result;
}

}  // namespace impart
