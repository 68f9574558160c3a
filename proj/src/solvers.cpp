#include "impart/solvers.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "impart/errors.hpp"
#include "impart/limits.hpp"
#include "impart/parameters.hpp"
#include "impart/partiteness.hpp"

namespace impart {

namespace {

using u64 = std::uint64_t;

u64 bit(int v) { return u64{1} << v; }

// Subsets of `universe` of size 0..max_size, size-ascending then
// lexicographic on the sorted member lists. Visitor returns true to stop.
template <typename F>
void enumerate_subsets(const std::vector<Vertex>& universe, int max_size, F&& visit) {
    const int n = static_cast<int>(universe.size());
    max_size = std::min(max_size, n);
    for (int s = 0; s <= max_size; ++s) {
        std::vector<int> idx(s);
        for (int i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            std::vector<Vertex> members(s);
            for (int i = 0; i < s; ++i) members[i] = universe[idx[i]];
            if (visit(VertexSet(std::move(members)))) return;
            int i = s - 1;
            while (i >= 0 && idx[i] == n - s + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
}

std::vector<Vertex> all_vertices(const Graph& g) {
    std::vector<Vertex> v(g.order());
    for (int i = 0; i < g.order(); ++i) v[i] = i;
    return v;
}

// Bounded search: does the graph contain a stable set of the given order?
bool has_stable_set_of_order(const Graph& g, int target) {
    if (target <= 0) return true;
    if (g.order() > limits::kMaxBitsetVertices)
        throw CeilingError("has_stable_set_of_order: graph exceeds bitset ceiling");
    std::vector<u64> closed(g.order());
    for (Vertex v = 0; v < g.order(); ++v) closed[v] = g.neighbor_mask(v) | bit(v);
    const auto search = [&](auto&& self, u64 candidates, int need) -> bool {
        if (need == 0) return true;
        if (std::popcount(candidates) < need) return false;
        int v = std::countr_zero(candidates);
        return self(self, candidates & ~closed[v], need - 1) ||
               self(self, candidates & ~bit(v), need);
    };
    return search(search, g.full_mask(), target);
}

VertexSet largest_bag(const std::vector<VertexSet>& bags) {
    int best = -1, size = -1;
    for (int i = 0; i < static_cast<int>(bags.size()); ++i)
        if (bags[i].size() > size) {
            size = bags[i].size();
            best = i;
        }
    return best >= 0 ? bags[best] : VertexSet{};
}

void check_large_args(int k, int ell, int m) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    if (ell < 0 || m < 0) throw std::invalid_argument("ell and m must be non-negative");
}

}  // namespace

std::string_view to_string(EarlyExit reason) {
    switch (reason) {
        case EarlyExit::pigeonhole: return "pigeonhole";
        case EarlyExit::width_exceeded: return "width_exceeded";
        case EarlyExit::high_degree: return "high_degree";
        case EarlyExit::edge_budget: return "edge_budget";
    }
    return "unknown";
}

Answer ikpsp_decide(const Graph& g, ParameterId p, int k, int ell) {
    if (k < 2) throw std::invalid_argument("ikpsp_decide: k must be at least 2");
    PkResult r = p_of_G_k(g, p, k);
    Answer answer;
    answer.verdict = r.value <= ell;
    std::vector<Vertex> removed;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!r.witness.contains(v)) removed.push_back(v);
    answer.deleted = VertexSet(std::move(removed));
    answer.trace.candidates_examined = static_cast<long long>(1) << g.order();
    return answer;
}

Answer large_ikpsp_oracle(const Graph& g, ParameterId p, int k, int ell, int m) {
    check_large_args(k, ell, m);
    Answer answer;
    enumerate_subsets(all_vertices(g), m, [&](VertexSet s) {
        ++answer.trace.candidates_examined;
        Graph h = delete_vertices(g, s);
        if (!is_k_partite_decision(h, k)) return false;
        if (!parameter_defined_on(p, h)) return false;
        if (evaluate_parameter(p, h) > ell) return false;
        answer.verdict = true;
        answer.deleted = std::move(s);
        return true;
    });
    return answer;
}

Answer large_fpt_independence(const Graph& g, int k, int ell, int m) {
    check_large_args(k, ell, m);
    Answer answer;
    // Pigeonhole: a k-partite graph with independence number at most ell has
    // at most k*ell vertices.
    if (static_cast<long long>(g.order()) > static_cast<long long>(k) * ell + m) {
        answer.trace.early_exit_reason = EarlyExit::pigeonhole;
        return answer;
    }
    enumerate_subsets(all_vertices(g), m, [&](VertexSet s) {
        ++answer.trace.candidates_examined;
        Graph h = delete_vertices(g, s);
        if (has_stable_set_of_order(h, ell + 1)) return false;
        if (!is_k_partite_decision(h, k)) return false;
        answer.verdict = true;
        answer.deleted = std::move(s);
        return true;
    });
    return answer;
}

Answer large_fpt_treewidth(const Graph& g, int k, int ell, int m,
                           const std::optional<TreeDecomposition>& supplied) {
    check_large_args(k, ell, m);
    Answer answer;
    if (g.order() == 0) return answer;  // treewidth undefined on every remainder

    std::vector<VertexSet> bags;
    if (supplied) {
        if (!validate_tree_decomposition(g, *supplied))
            throw std::invalid_argument("large_fpt_treewidth: invalid decomposition");
        if (supplied->width() > ell + m)
            throw std::invalid_argument("large_fpt_treewidth: decomposition width above ell+m");
        bags = supplied->bags;
    } else {
        TreewidthResult tw = treewidth(g);
        if (tw.width > ell + m) {
            answer.trace.early_exit_reason = EarlyExit::width_exceeded;
            return answer;
        }
        bags = tw.decomposition.bags;
    }

    VertexSet b = largest_bag(bags);
    answer.trace.bag = b;
    enumerate_subsets(b.members(), m, [&](VertexSet s) {
        ++answer.trace.candidates_examined;
        Graph h = delete_vertices(g, s);
        if (h.order() == 0) return false;
        TreewidthResult sub = treewidth(h);
        if (sub.width > ell) return false;
        if (!is_k_partite_via_decomposition(h, sub.decomposition, k)) return false;
        answer.verdict = true;
        answer.deleted = std::move(s);
        return true;
    });
    return answer;
}

Answer large_fpt_pathwidth(const Graph& g, int k, int ell, int m,
                           const std::optional<PathDecomposition>& supplied) {
    check_large_args(k, ell, m);
    Answer answer;
    if (g.order() == 0) return answer;

    std::vector<VertexSet> bags;
    if (supplied) {
        if (!validate_path_decomposition(g, *supplied))
            throw std::invalid_argument("large_fpt_pathwidth: invalid decomposition");
        if (supplied->width() > ell + m)
            throw std::invalid_argument("large_fpt_pathwidth: decomposition width above ell+m");
        bags = supplied->bags;
    } else {
        PathwidthResult pw = pathwidth(g);
        if (pw.width > ell + m) {
            answer.trace.early_exit_reason = EarlyExit::width_exceeded;
            return answer;
        }
        bags = pw.decomposition.bags;
    }

    VertexSet b = largest_bag(bags);
    answer.trace.bag = b;
    enumerate_subsets(b.members(), m, [&](VertexSet s) {
        ++answer.trace.candidates_examined;
        Graph h = delete_vertices(g, s);
        if (h.order() == 0) return false;
        PathwidthResult sub = pathwidth(h);
        if (sub.width > ell) return false;
        if (!is_k_partite_via_decomposition(h, sub.decomposition.as_tree(), k)) return false;
        answer.verdict = true;
        answer.deleted = std::move(s);
        return true;
    });
    return answer;
}

Answer large_fpt_vertices(const Graph& g, int k, int ell, int m) {
    check_large_args(k, ell, m);
    Answer answer;
    if (static_cast<long long>(g.order()) > static_cast<long long>(ell) + m) {
        answer.trace.early_exit_reason = EarlyExit::pigeonhole;
        return answer;
    }
    enumerate_subsets(all_vertices(g), m, [&](VertexSet s) {
        ++answer.trace.candidates_examined;
        Graph h = delete_vertices(g, s);
        if (h.order() > ell) return false;
        if (!is_k_partite_decision(h, k)) return false;
        answer.verdict = true;
        answer.deleted = std::move(s);
        return true;
    });
    return answer;
}

Answer large_fpt_edges(const Graph& g, int k, int ell, int m) {
    check_large_args(k, ell, m);
    Answer answer;

    std::vector<Vertex> high;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) > ell + m) high.push_back(v);
    const int s = static_cast<int>(high.size());
    answer.trace.high_degree_count = s;
    if (s > m) {
        answer.trace.early_exit_reason = EarlyExit::high_degree;
        return answer;
    }

    // Work on G minus the high-degree vertices, in original ids.
    std::vector<char> removed(g.order(), 0);
    for (Vertex v : high) removed[v] = 1;
    std::vector<int> residual_degree(g.order(), 0);
    long long residual_edges = 0;
    for (auto [u, v] : g.edges())
        if (!removed[u] && !removed[v]) {
            ++residual_degree[u];
            ++residual_degree[v];
            ++residual_edges;
        }

    const long long t = static_cast<long long>(ell + m) * (m - s) + ell;
    answer.trace.edge_budget = t;
    if (residual_edges > t) {
        answer.trace.early_exit_reason = EarlyExit::edge_budget;
        return answer;
    }

    // Isolated vertices stay in the remainder; candidates are the rest.
    std::vector<Vertex> candidates;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!removed[v] && residual_degree[v] > 0) candidates.push_back(v);

    enumerate_subsets(candidates, m - s, [&](VertexSet chosen) {
        ++answer.trace.candidates_examined;
        std::vector<Vertex> deletion(high);
        deletion.insert(deletion.end(), chosen.members().begin(), chosen.members().end());
        VertexSet full(std::move(deletion));
        Graph h = delete_vertices(g, full);
        if (h.size() > ell) return false;
        if (!is_k_partite_decision(h, k)) return false;
        answer.verdict = true;
        answer.deleted = std::move(full);
        return true;
    });
    return answer;
}

bool max_stable_set_decide(const Graph& g, int m) {
    if (m < 0) throw std::invalid_argument("max_stable_set_decide: m must be non-negative");
    return independence_number(g).value <= m;
}

bool verify_answer(const Graph& g, const ProblemInstance& instance, const Answer& answer) {
    if (!answer.deleted) throw std::invalid_argument("verify_answer: answer carries no witness");
    for (Vertex v : answer.deleted->members())
        if (v < 0 || v >= g.order()) return false;
    Graph h = delete_vertices(g, *answer.deleted);
    if (!is_k_partite_decision(h, instance.k)) return false;
    if (!parameter_defined_on(instance.param, h)) return false;
    if (evaluate_parameter(instance.param, h) > instance.ell) return false;
    if (instance.m && h.order() < g.order() - *instance.m) return false;
    return true;
}

}  // namespace impart
