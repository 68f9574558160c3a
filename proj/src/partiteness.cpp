#include "impart/partiteness.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

#include "impart/errors.hpp"
#include "impart/limits.hpp"

namespace impart {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 bit(int v) { return u64{1} << v; }

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128{a} * b % p); }

u64 powmod(u64 base, u64 exp, u64 p) {
    u64 r = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) r = mulmod(r, base, p);
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    return r;
}

u128 pow128(u128 base, int exp) {
    u128 r = 1;
    while (exp > 0) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

// Deterministic for all 64-bit inputs with this witness set.
bool miller_rabin(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (n % p == 0) return n == p;
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Largest primes below 2^62, generated on first use and cached. Returns a
// copy; the cache may be grown from several threads.
std::vector<u64> primes_for(int count) {
    static std::mutex lock;
    static std::vector<u64> primes;
    std::lock_guard guard(lock);
    while (static_cast<int>(primes.size()) < count) {
        u64 candidate = primes.empty() ? ((u64{1} << 62) - 1) : primes.back() - 2;
        while (!miller_rabin(candidate)) candidate -= 2;
        primes.push_back(candidate);
    }
    return {primes.begin(), primes.begin() + count};
}

// Number of ordered covers of S by k independent sets equals
// sum over T subset of S of (-1)^{|S|-|T|} i(T)^k; positive iff chi <= k.
bool cover_count_positive(const std::vector<std::uint32_t>& counts, u64 s_mask, int k) {
    const int bits = std::popcount(s_mask);
    // |partial sums| < 2^{bits*(k+1)}; exact under 128-bit wraparound when that fits.
    if (static_cast<long long>(bits) * (k + 1) <= 126) {
        u128 acc = 0;
        u64 t = s_mask;
        while (true) {
            u128 term = pow128(counts[t], k);
            if ((bits - std::popcount(t)) & 1)
                acc -= term;
            else
                acc += term;
            if (t == 0) break;
            t = (t - 1) & s_mask;
        }
        return acc != 0;
    }
    // Residues modulo enough primes that an all-zero result forces a zero sum.
    const int needed = static_cast<int>((static_cast<long long>(bits) * (k + 1) + 1) / 61) + 1;
    const auto& primes = primes_for(needed);
    for (int i = 0; i < needed; ++i) {
        const u64 p = primes[i];
        u64 acc = 0;
        u64 t = s_mask;
        while (true) {
            u64 term = powmod(counts[t], static_cast<u64>(k), p);
            if ((bits - std::popcount(t)) & 1)
                acc = (acc + p - term) % p;
            else
                acc = (acc + term) % p;
            if (t == 0) break;
            t = (t - 1) & s_mask;
        }
        if (acc != 0) return true;
    }
    return false;
}

// Two-coloring restricted to a subset of vertices; mask form, n <= 64.
bool bipartite_on_mask(const Graph& g, u64 mask, std::vector<int>* colors_out) {
    std::vector<int> color(g.order(), -1);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (!(mask & bit(s)) || color[s] >= 0) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                if (!(mask & bit(w))) continue;
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    if (colors_out) *colors_out = std::move(color);
    return true;
}

// Maximal independent sets of g restricted to `universe`, Bron-Kerbosch with
// pivoting on the complement. Callback returns true to stop the enumeration.
class MaximalIndependentSets {
  public:
    MaximalIndependentSets(const Graph& g, u64 universe) : g_(&g), universe_(universe) {}

    template <typename F>
    bool enumerate(F&& emit) {
        return expand(0, universe_, 0, emit);
    }

  private:
    u64 nonneighbors(Vertex v) const { return universe_ & ~g_->neighbor_mask(v) & ~bit(v); }

    template <typename F>
    bool expand(u64 current, u64 candidates, u64 excluded, F&& emit) {
        if (candidates == 0 && excluded == 0) return emit(current);
        int pivot = -1, best = -1;
        for (u64 px = candidates | excluded; px; px &= px - 1) {
            int u = std::countr_zero(px);
            int covered = std::popcount(candidates & nonneighbors(u));
            if (covered > best) {
                best = covered;
                pivot = u;
            }
        }
        for (u64 it = candidates & ~nonneighbors(pivot); it; it &= it - 1) {
            int v = std::countr_zero(it);
            if (expand(current | bit(v), candidates & nonneighbors(v), excluded & nonneighbors(v),
                       emit))
                return true;
            candidates &= ~bit(v);
            excluded |= bit(v);
        }
        return false;
    }

    const Graph* g_;
    u64 universe_;
};

// First-fit coloring in vertex order; cheap upper bound and witness source.
std::vector<int> greedy_coloring(const Graph& g, int* colors_used) {
    std::vector<int> color(g.order(), -1);
    int used = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        u64 taken = 0;
        for (Vertex w : g.neighbors(v))
            if (color[w] >= 0) taken |= bit(color[w]);
        int c = std::countr_one(taken);
        color[v] = c;
        used = std::max(used, c + 1);
    }
    *colors_used = used;
    return color;
}

VertexSet non_isolated_vertices(const Graph& g) {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) > 0) keep.push_back(v);
    return VertexSet(std::move(keep));
}

}  // namespace

bool ColoringWitness::valid_for(const Graph& g) const {
    if (static_cast<int>(colors.size()) != g.order()) return false;
    for (int c : colors)
        if (c < 0 || c >= k) return false;
    for (auto [u, v] : g.edges())
        if (colors[u] == colors[v]) return false;
    return true;
}

ColorabilityOracle::ColorabilityOracle(const Graph& g) : g_(&g), n_(g.order()) {
    if (n_ > limits::kMaxChromaticVertices)
        throw CeilingError("ColorabilityOracle: graph exceeds chromatic ceiling");
    counts_.assign(u64{1} << n_, 0);
    counts_[0] = 1;
    for (u64 s = 1; s < counts_.size(); ++s) {
        int v = std::countr_zero(s);
        u64 closed = g.neighbor_mask(v) | bit(v);
        counts_[s] = counts_[s & ~bit(v)] + counts_[s & ~closed];
    }
}

bool ColorabilityOracle::chromatic_at_most(u64 mask, int k) const {
    const int members = std::popcount(mask);
    if (k >= members) return true;
    if (k <= 0) return members == 0;
    if (k == 1) {
        for (u64 it = mask; it; it &= it - 1)
            if (g_->neighbor_mask(std::countr_zero(it)) & mask) return false;
        return true;
    }
    if (k == 2) return bipartite_on_mask(*g_, mask, nullptr);
    return cover_count_positive(counts_, mask, k);
}

int ColorabilityOracle::chromatic_number(u64 mask) const {
    if (mask == 0) return 0;
    for (int k = 1;; ++k)
        if (chromatic_at_most(mask, k)) return k;
}

std::optional<ColoringWitness> is_bipartite(const Graph& g) {
    std::vector<int> color(g.order(), -1);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return ColoringWitness{std::move(color), 2};
}

int chromatic_number(const Graph& g) {
    if (g.order() == 0) return 0;
    if (g.size() == 0) return 1;
    if (is_bipartite(g)) return 2;
    // Isolated vertices never raise the chromatic number.
    Graph core = induced_subgraph(g, non_isolated_vertices(g));
    ColorabilityOracle oracle(core);
    for (int k = 3;; ++k)
        if (oracle.chromatic_at_most(core.full_mask(), k)) return k;
}

bool is_k_partite_decision(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("is_k_partite: k must be at least 1");
    if (k >= g.order()) return true;
    if (k == 1) return g.size() == 0;
    if (k == 2) return is_bipartite(g).has_value();
    if (g.order() <= limits::kMaxBitsetVertices) {
        int greedy_used = 0;
        greedy_coloring(g, &greedy_used);
        if (greedy_used <= k) return true;
    }
    Graph core = induced_subgraph(g, non_isolated_vertices(g));
    if (k >= core.order()) return true;
    ColorabilityOracle oracle(core);
    return oracle.chromatic_at_most(core.full_mask(), k);
}

std::optional<ColoringWitness> is_k_partite(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("is_k_partite: k must be at least 1");
    const int n = g.order();
    if (n == 0) return ColoringWitness{{}, k};
    if (k >= n) {
        std::vector<int> colors(n);
        for (int v = 0; v < n; ++v) colors[v] = v;
        return ColoringWitness{std::move(colors), k};
    }
    if (n <= limits::kMaxBitsetVertices) {
        int greedy_used = 0;
        auto greedy = greedy_coloring(g, &greedy_used);
        if (greedy_used <= k) return ColoringWitness{std::move(greedy), k};
    }
    if (k == 2) {
        auto w = is_bipartite(g);
        if (!w) return std::nullopt;
        return w;
    }

    ColorabilityOracle oracle(g);
    if (!oracle.chromatic_at_most(g.full_mask(), k)) return std::nullopt;

    // Peel one color class at a time: some maximal independent set always
    // leaves a (k-1)-colorable remainder.
    std::vector<int> colors(n, -1);
    u64 remaining = g.full_mask();
    int next_color = 0;
    int budget = k;
    while (remaining) {
        if (budget == 1) {
            for (u64 it = remaining; it; it &= it - 1) colors[std::countr_zero(it)] = next_color;
            break;
        }
        u64 chosen = 0;
        bool found = MaximalIndependentSets(g, remaining).enumerate([&](u64 candidate) {
            if (oracle.chromatic_at_most(remaining & ~candidate, budget - 1)) {
                chosen = candidate;
                return true;
            }
            return false;
        });
        if (!found) return std::nullopt;  // unreachable: decision said colorable
        for (u64 it = chosen; it; it &= it - 1) colors[std::countr_zero(it)] = next_color;
        remaining &= ~chosen;
        ++next_color;
        --budget;
    }
    return ColoringWitness{std::move(colors), k};
}

namespace {

// Bag colorings are indices into the k^{bag size} enumeration; digit i is the
// color of bag.members()[i].
void decode_coloring(std::uint64_t code, int k, int size, std::vector<int>& out) {
    out.resize(size);
    for (int i = 0; i < size; ++i) {
        out[i] = static_cast<int>(code % k);
        code /= k;
    }
}

std::uint64_t restriction_key(const std::vector<Vertex>& bag, const std::vector<int>& digits,
                              const std::vector<Vertex>& shared, int k) {
    std::uint64_t key = 0;
    for (Vertex v : shared) {
        auto it = std::lower_bound(bag.begin(), bag.end(), v);
        key = key * k + static_cast<std::uint64_t>(digits[it - bag.begin()]);
    }
    return key;
}

}  // namespace

std::optional<ColoringWitness> is_k_partite_via_decomposition(const Graph& g,
                                                              const TreeDecomposition& td, int k) {
    if (k < 1) throw std::invalid_argument("is_k_partite_via_decomposition: k must be at least 1");
    if (!validate_tree_decomposition(g, td))
        throw std::invalid_argument("is_k_partite_via_decomposition: invalid decomposition");
    if (g.order() == 0) return ColoringWitness{{}, k};

    const int nodes = static_cast<int>(td.bags.size());
    std::vector<std::vector<int>> children(nodes);
    std::vector<int> parent(nodes, -1), order;
    {
        std::vector<std::vector<int>> adj(nodes);
        for (auto [a, b] : td.tree_edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        std::vector<int> stack{0};
        std::vector<char> seen(nodes, 0);
        seen[0] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            order.push_back(v);
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    parent[w] = v;
                    children[v].push_back(w);
                    stack.push_back(w);
                }
        }
    }

    std::vector<std::uint64_t> enumeration_size(nodes);
    for (int t = 0; t < nodes; ++t) {
        std::uint64_t total = 1;
        for (int i = 0; i < td.bags[t].size(); ++i) {
            total *= static_cast<std::uint64_t>(k);
            if (total > (std::uint64_t{1} << 26))
                throw CeilingError("is_k_partite_via_decomposition: bag coloring space too large");
        }
        enumeration_size[t] = total;
    }

    std::vector<std::vector<Vertex>> shared_up(nodes);
    for (int t = 0; t < nodes; ++t) {
        if (parent[t] < 0) continue;
        for (Vertex v : td.bags[t].members())
            if (td.bags[parent[t]].contains(v)) shared_up[t].push_back(v);
    }

    std::vector<std::vector<std::uint64_t>> valid(nodes);
    std::vector<std::unordered_set<std::uint64_t>> up_keys(nodes);
    std::vector<int> digits;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int t = *it;
        const auto& bag = td.bags[t].members();
        for (std::uint64_t code = 0; code < enumeration_size[t]; ++code) {
            decode_coloring(code, k, static_cast<int>(bag.size()), digits);
            bool ok = true;
            for (size_t i = 0; i < bag.size() && ok; ++i)
                for (size_t j = i + 1; j < bag.size() && ok; ++j)
                    if (digits[i] == digits[j] && g.adjacent(bag[i], bag[j])) ok = false;
            for (int c : children[t]) {
                if (!ok) break;
                if (!up_keys[c].count(restriction_key(bag, digits, shared_up[c], k))) ok = false;
            }
            if (!ok) continue;
            valid[t].push_back(code);
            if (parent[t] >= 0) up_keys[t].insert(restriction_key(bag, digits, shared_up[t], k));
        }
        if (valid[t].empty()) return std::nullopt;
        for (int c : children[t]) up_keys[c].clear();
    }

    // Top-down: pick the first stored coloring consistent with what the
    // parent already fixed on the shared vertices.
    std::vector<int> colors(g.order(), -1);
    for (int t : order) {
        const auto& bag = td.bags[t].members();
        bool found = false;
        for (std::uint64_t code : valid[t]) {
            decode_coloring(code, k, static_cast<int>(bag.size()), digits);
            bool consistent = true;
            for (size_t i = 0; i < bag.size(); ++i)
                if (colors[bag[i]] >= 0 && colors[bag[i]] != digits[i]) {
                    consistent = false;
                    break;
                }
            if (consistent) {
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt;  // unreachable on a consistent DP state
        for (size_t i = 0; i < bag.size(); ++i) colors[bag[i]] = digits[i];
    }
    return ColoringWitness{std::move(colors), k};
}

}  // namespace impart
