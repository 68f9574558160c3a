#include "impart/imgp.hpp"

#include <bit>
#include <random>
#include <stdexcept>
#include <thread>

#include "impart/errors.hpp"
#include "impart/limits.hpp"
#include "impart/parameters.hpp"
#include "impart/partiteness.hpp"
#include "impart/runtime.hpp"

namespace impart {

std::string_view to_string(ParameterId p) {
    switch (p) {
        case ParameterId::order: return "order";
        case ParameterId::size: return "size";
        case ParameterId::min_degree: return "min_degree";
        case ParameterId::max_degree: return "max_degree";
        case ParameterId::vertex_connectivity: return "vertex_connectivity";
        case ParameterId::edge_connectivity: return "edge_connectivity";
        case ParameterId::independence_number: return "independence_number";
        case ParameterId::chromatic_index: return "chromatic_index";
        case ParameterId::treewidth: return "treewidth";
        case ParameterId::pathwidth: return "pathwidth";
    }
    return "unknown";
}

std::optional<ParameterId> parameter_from_string(std::string_view name) {
    for (ParameterId p : kAllParameters)
        if (to_string(p) == name) return p;
    return std::nullopt;
}

long long f_k(ParameterId p, int k, int n) {
    if (k < 2) throw std::invalid_argument("f_k: k must be at least 2");
    if (n < 1) throw std::invalid_argument("f_k: n must be positive");
    const long long kk = k, nn = n;
    switch (p) {
        case ParameterId::order: return kk * nn;
        case ParameterId::size: return kk * (kk - 1) / 2 * nn * nn;
        case ParameterId::min_degree:
        case ParameterId::max_degree:
        case ParameterId::vertex_connectivity:
        case ParameterId::edge_connectivity:
        case ParameterId::treewidth:
        case ParameterId::pathwidth: return (kk - 1) * nn;
        case ParameterId::independence_number: return nn;
        case ParameterId::chromatic_index:
            return (kk * nn) % 2 == 0 ? (kk - 1) * nn : (kk - 1) * nn + 1;
    }
    throw std::invalid_argument("f_k: unknown parameter");
}

bool parameter_defined_on(ParameterId p, const Graph& g) {
    switch (p) {
        case ParameterId::order:
        case ParameterId::size:
        case ParameterId::independence_number:
        case ParameterId::chromatic_index: return true;
        case ParameterId::min_degree:
        case ParameterId::max_degree:
        case ParameterId::vertex_connectivity:
        case ParameterId::treewidth:
        case ParameterId::pathwidth: return g.order() >= 1;
        case ParameterId::edge_connectivity: return g.order() >= 2;
    }
    return false;
}

long long evaluate_parameter(ParameterId p, const Graph& g) {
    switch (p) {
        case ParameterId::order: return g.order();
        case ParameterId::size: return g.size();
        case ParameterId::min_degree: return min_degree(g);
        case ParameterId::max_degree: return max_degree(g);
        case ParameterId::vertex_connectivity: return vertex_connectivity(g);
        case ParameterId::edge_connectivity: return edge_connectivity(g);
        case ParameterId::independence_number: return independence_number(g).value;
        case ParameterId::chromatic_index: return chromatic_index(g);
        case ParameterId::treewidth: return treewidth(g).width;
        case ParameterId::pathwidth: return pathwidth(g).width;
    }
    throw std::invalid_argument("evaluate_parameter: unknown parameter");
}

namespace {

struct ScanResult {
    bool found = false;
    long long value = 0;
    std::uint64_t mask = 0;  // smallest maximizing mask in the scanned range
};

}  // namespace

PkResult p_of_G_k(const Graph& g, ParameterId p, int k) {
    if (k < 2) throw std::invalid_argument("p_of_G_k: k must be at least 2");
    const int n = g.order();
    if (n > limits::kMaxSubsetEnumerationVertices)
        throw CeilingError("p_of_G_k: graph exceeds subset enumeration ceiling");

    const ColorabilityOracle oracle(g);
    const std::uint64_t total = std::uint64_t{1} << n;
    auto scan = [&](std::uint64_t begin, std::uint64_t end) {
        ScanResult local;
        for (std::uint64_t mask = begin; mask < end; ++mask) {
            const int members = std::popcount(mask);
            // Definedness screen before materializing.
            if (members == 0 && p != ParameterId::order && p != ParameterId::size &&
                p != ParameterId::independence_number && p != ParameterId::chromatic_index)
                continue;
            if (members < 2 && p == ParameterId::edge_connectivity) continue;
            if (!oracle.chromatic_at_most(mask, k)) continue;
            Graph h = induced_subgraph(g, VertexSet::from_mask(mask));
            long long value = evaluate_parameter(p, h);
            if (!local.found || value > local.value) {
                local.found = true;
                local.value = value;
                local.mask = mask;
            }
        }
        return local;
    };

    const int threads = std::min(max_threads(), 8);
    std::vector<ScanResult> results;
    if (threads > 1 && total >= 4096) {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(threads);
        results.resize(threads);
        const std::uint64_t chunk = (total + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                try {
                    results[t] = scan(t * chunk, std::min(total, (t + 1) * chunk));
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto& worker : pool) worker.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    } else {
        results.push_back(scan(0, total));
    }

    // Deterministic merge: larger value wins, ties toward the smaller mask.
    ScanResult best;
    for (const auto& r : results) {
        if (!r.found) continue;
        if (!best.found || r.value > best.value || (r.value == best.value && r.mask < best.mask)) {
            best = r;
        }
    }
    if (!best.found)
        throw std::invalid_argument("p_of_G_k: parameter undefined on every k-partite subset");
    return {best.value, VertexSet::from_mask(best.mask)};
}

bool check_P1(ParameterId p, int n, int k, int trials, std::uint64_t seed) {
    const Graph g = complete_multipartite(n, k).first;
    const long long bound = f_k(p, k, n);
    const int vertices = g.order();
    if (vertices > limits::kMaxBitsetVertices)
        throw CeilingError("check_P1: graph exceeds bitset ceiling");

    auto subgraph_ok = [&](std::uint64_t mask) {
        Graph h = induced_subgraph(g, VertexSet::from_mask(mask));
        if (!parameter_defined_on(p, h)) return true;
        return evaluate_parameter(p, h) <= bound;
    };

    if (vertices <= 12) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vertices); ++mask)
            if (!subgraph_ok(mask)) return false;
        return true;
    }
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        std::uint64_t mask = rng() & g.full_mask();
        if (!subgraph_ok(mask)) return false;
    }
    return true;
}

bool check_P2(ParameterId p, int k, int n_max) {
    for (int n = 1; n < n_max; ++n)
        if (f_k(p, k, n) >= f_k(p, k, n + 1)) return false;
    for (int n = 1; n <= n_max; ++n) {
        auto [g, parts] = complete_multipartite(n, k);
        if ((p == ParameterId::treewidth || p == ParameterId::pathwidth) &&
            g.order() > limits::kMaxWidthVertices)
            continue;
        if (p == ParameterId::chromatic_index && g.size() > limits::kMaxChromaticIndexEdges)
            continue;
        if (p == ParameterId::independence_number &&
            g.order() > limits::kMaxIndependenceVertices)
            continue;
        if (evaluate_parameter(p, g) != f_k(p, k, n)) return false;
    }
    return true;
}

}  // namespace impart
