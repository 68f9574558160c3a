#include "impart/reductions.hpp"

#include <stdexcept>

#include "impart/io.hpp"
#include "impart/parameters.hpp"

namespace impart {

ReductionOutput mss_to_ikpsp(const Graph& g, int m, int k, ParameterId p) {
    if (k < 2) throw std::invalid_argument("mss_to_ikpsp: k must be at least 2");
    if (m < 1) throw std::invalid_argument("mss_to_ikpsp: m must be positive (f_k is undefined at 0)");
    auto [product, blocks] = lex_product_with_complete(g, k);
    const long long threshold = f_k(p, k, m);
    ReductionOutput out;
    out.instance = ProblemInstance{product, p, k, static_cast<int>(threshold), std::nullopt};
    out.produced = std::move(product);
    out.threshold = threshold;
    out.provenance.reduction = "lex_product";
    out.provenance.source_graph6 = io::emit_graph6(g);
    out.provenance.parameters = {{"k", k}, {"m", m}};
    return out;
}

bool verify_theorem1_identity(const Graph& g, int k, ParameterId p) {
    if (g.order() < 1)
        throw std::invalid_argument("verify_theorem1_identity: source graph must be non-empty");
    auto [product, blocks] = lex_product_with_complete(g, k);
    const long long lhs = p_of_G_k(product, p, k).value;
    const long long rhs = f_k(p, k, independence_number(g).value);
    return lhs == rhs;
}

ReductionOutput tmd4_to_large(const Graph& g, ParameterId p) {
    int ell;
    switch (p) {
        case ParameterId::min_degree:
        case ParameterId::max_degree:
        case ParameterId::vertex_connectivity:
        case ParameterId::edge_connectivity: ell = 4; break;
        case ParameterId::chromatic_index: ell = 5; break;  // Vizing
        default:
            throw std::invalid_argument("tmd4_to_large: parameter not covered by this reduction");
    }
    if (g.order() > 0 && max_degree(g) > 4)
        throw std::invalid_argument("tmd4_to_large: maximum degree exceeds 4");
    ReductionOutput out;
    out.produced = g;
    out.instance = ProblemInstance{g, p, 3, ell, 0};
    out.provenance.reduction = "tmd4";
    out.provenance.source_graph6 = io::emit_graph6(g);
    out.provenance.parameters = {{"k", 3}, {"m", 0}, {"ell", ell}};
    return out;
}

}  // namespace impart
