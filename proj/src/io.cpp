#include "impart/io.hpp"

#include <cctype>
#include <random>
#include <sstream>
#include <stdexcept>

#include "impart/errors.hpp"

namespace impart::io {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

long long read_int(std::istringstream& in, const char* what) {
    long long value;
    if (!(in >> value)) throw ParseError(std::string("edge list: malformed ") + what);
    return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    const long long n = read_int(in, "vertex count");
    const long long m = read_int(in, "edge count");
    if (n < 0 || m < 0) throw ParseError("edge list: negative count");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        const long long u = read_int(in, "edge line");
        const long long v = read_int(in, "edge line");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    std::string trailing;
    if (in >> trailing) throw ParseError("edge list: trailing content after last edge");
    try {
        return Graph(static_cast<int>(n), edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("edge list: ") + e.what());
    }
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_graph6(std::string_view line) {
    if (line.substr(0, kGraph6Header.size()) == kGraph6Header)
        line.remove_prefix(kGraph6Header.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.empty()) throw ParseError("graph6: empty line");
    for (char c : line)
        if (c < 63 || c > 126) throw ParseError("graph6: invalid character");

    size_t pos = 0;
    long long n;
    if (line[0] != '~') {
        n = line[0] - 63;
        pos = 1;
    } else {
        if (line.size() >= 2 && line[1] == '~')
            throw ParseError("graph6: eight-byte order form not supported");
        if (line.size() < 4) throw ParseError("graph6: truncated order field");
        n = 0;
        for (int i = 1; i <= 3; ++i) n = (n << 6) | (line[i] - 63);
        pos = 4;
    }
    const long long bits = n * (n - 1) / 2;
    const size_t expected = static_cast<size_t>((bits + 5) / 6);
    if (line.size() - pos != expected) throw ParseError("graph6: bad framing for stated order");

    std::vector<Edge> edges;
    long long index = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++index) {
            const int byte = line[pos + index / 6] - 63;
            if ((byte >> (5 - index % 6)) & 1) edges.emplace_back(i, j);
        }
    // Padding bits must be zero.
    for (long long idx = bits; idx < static_cast<long long>(expected) * 6; ++idx) {
        const int byte = line[pos + idx / 6] - 63;
        if ((byte >> (5 - idx % 6)) & 1) throw ParseError("graph6: nonzero padding");
    }
    return Graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
    const long long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::invalid_argument("emit_graph6: order too large");
    }
    const long long bits = n * (n - 1) / 2;
    std::vector<char> bytes(static_cast<size_t>((bits + 5) / 6), 0);
    long long index = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++index)
            if (g.adjacent(i, j)) bytes[index / 6] |= static_cast<char>(1 << (5 - index % 6));
    for (char b : bytes) out.push_back(static_cast<char>(b + 63));
    return out;
}

Graph gen(const GenSpec& spec, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int n = spec.n;
    if (n < 0) throw std::invalid_argument("gen: negative order");

    if (spec.kind == "gnp") {
        if (spec.p < 0.0 || spec.p > 1.0) throw std::invalid_argument("gen: p outside [0,1]");
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                const double roll = static_cast<double>(rng() >> 11) * 0x1.0p-53;
                if (roll < spec.p) edges.emplace_back(u, v);
            }
        return Graph(n, edges);
    }
    if (spec.kind == "cycle") {
        if (n < 3) throw std::invalid_argument("gen: cycle needs at least 3 vertices");
        std::vector<Edge> edges;
        for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
        return Graph(n, edges);
    }
    if (spec.kind == "path") {
        std::vector<Edge> edges;
        for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
        return Graph(n, edges);
    }
    if (spec.kind == "complete") {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
        return Graph(n, edges);
    }
    if (spec.kind == "complete_multipartite") {
        return complete_multipartite(n, spec.k).first;
    }
    if (spec.kind == "max_degree4") {
        const int budget = spec.edge_budget >= 0 ? spec.edge_budget : 2 * n;
        std::vector<int> degree(n, 0);
        std::vector<std::vector<char>> present(n, std::vector<char>(n, 0));
        std::vector<Edge> edges;
        for (int added = 0; added < budget; ++added) {
            std::vector<Edge> open;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (!present[u][v] && degree[u] < 4 && degree[v] < 4) open.emplace_back(u, v);
            if (open.empty()) break;
            auto [u, v] = open[rng() % open.size()];
            present[u][v] = 1;
            ++degree[u];
            ++degree[v];
            edges.emplace_back(u, v);
        }
        return Graph(n, edges);
    }
    throw std::invalid_argument("gen: unknown kind '" + spec.kind + "'");
}

}  // namespace impart::io
