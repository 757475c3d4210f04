#include "fsp/dynamics.hpp"

#include <bit>
#include <string>

#include "fsp/errors.hpp"

namespace fsp {

namespace {

void require_edge(const Graph& g, Vertex u, Vertex v, const char* where) {
    if (u >= g.vertex_count() || v >= g.vertex_count() || !g.has_edge(u, v)) {
        throw ParameterError(std::string(where) + ": {" + std::to_string(u) + "," + std::to_string(v) +
                             "} is not an edge");
    }
}

void require_enumerable(const Graph& g, const char* where) {
    if (g.vertex_count() > kExactOracleMaxVertices) {
        throw CapacityError(std::string(where) + ": exhaustive oracle supports at most 16 vertices, got " +
                            std::to_string(g.vertex_count()));
    }
}

std::uint32_t class_decisiveness(const TypeAssignment& t, const std::vector<Vertex>& members) {
    std::int64_t balance = 0;
    for (Vertex w : members) balance += t[w] == AgentType::Plus ? 1 : -1;
    return static_cast<std::uint32_t>(balance < 0 ? -balance : balance);
}

std::uint32_t mask_of(const std::vector<Vertex>& members) {
    std::uint32_t m = 0;
    for (Vertex w : members) m |= 1u << w;
    return m;
}

// |#Plus - #Minus| over the vertices in `members`, types given as a bitmask (1 = Plus).
int mask_decisiveness(std::uint32_t types, std::uint32_t members) {
    const int plus = std::popcount(types & members);
    const int size = std::popcount(members);
    const int diff = 2 * plus - size;
    return diff < 0 ? -diff : diff;
}

} // namespace

TypeAssignment initial_types(std::size_t n, RngStream& stream) {
    TypeAssignment t;
    t.types.resize(n);
    for (auto& x : t.types) x = stream.next_fair_coin() ? AgentType::Plus : AgentType::Minus;
    return t;
}

TypeAssignment fsp_step(const Graph& g, const TypeAssignment& t, RngStream& stream) {
    const std::size_t n = g.vertex_count();
    if (t.size() != n) {
        throw ParameterError("fsp_step: assignment has " + std::to_string(t.size()) + " entries for " +
                             std::to_string(n) + " vertices");
    }
    TypeAssignment out = t;
    for (Vertex v = 0; v < n; ++v) {
        const std::size_t degree = g.degree(v);
        if (degree == 0) continue;
        std::size_t agree = 0;
        for (Vertex w : g.neighbors(v)) agree += t[w] == t[v];
        if (2 * agree > degree) continue;
        if (2 * agree < degree || stream.next_fair_coin()) out[v] = opposite(t[v]);
    }
    return out;
}

double monochrome_fraction(const Graph& g, const TypeAssignment& t) {
    if (t.size() != g.vertex_count()) throw ParameterError("monochrome_fraction: assignment size mismatch");
    if (g.edge_count() == 0) throw DomainError("monochrome_fraction: graph has no edges");
    std::size_t mono = 0;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (Vertex v : g.neighbors(u)) {
            if (u < v && t[u] == t[v]) ++mono;
        }
    }
    return static_cast<double>(mono) / static_cast<double>(g.edge_count());
}

DecisivenessTriple edge_decisiveness(const Graph& g, const TypeAssignment& t, Vertex u, Vertex v) {
    require_edge(g, u, v, "edge_decisiveness");
    if (t.size() != g.vertex_count()) throw ParameterError("edge_decisiveness: assignment size mismatch");
    const auto part = neighborhood_partition(g, u, v);
    return {class_decisiveness(t, part.common), class_decisiveness(t, part.u_exclusive),
            class_decisiveness(t, part.v_exclusive)};
}

Rational exact_monochrome_probability(const Graph& g, Vertex u, Vertex v) {
    require_edge(g, u, v, "exact_monochrome_probability");
    require_enumerable(g, "exact_monochrome_probability");
    const auto n = static_cast<std::uint32_t>(g.vertex_count());

    std::vector<std::uint32_t> nb(n, 0);
    for (Vertex x = 0; x < n; ++x)
        for (Vertex w : g.neighbors(x)) nb[x] |= 1u << w;

    // Final Plus probability of x in halves: 0, 1 (tie coin) or 2.
    auto plus_halves = [&](std::uint32_t types, Vertex x) -> std::uint64_t {
        const bool is_plus = (types >> x) & 1u;
        const int degree = std::popcount(nb[x]);
        const int plus_nb = std::popcount(types & nb[x]);
        const int agree = is_plus ? plus_nb : degree - plus_nb;
        bool final_plus = is_plus;
        if (2 * agree == degree) return 1;
        if (2 * agree < degree) final_plus = !is_plus;
        return final_plus ? 2 : 0;
    };

    // Each assignment contributes P(mono) in quarters; u and v use independent coins.
    std::uint64_t quarters = 0;
    for (std::uint32_t types = 0; types < (1u << n); ++types) {
        const std::uint64_t pu = plus_halves(types, u);
        const std::uint64_t pv = plus_halves(types, v);
        quarters += pu * pv + (2 - pu) * (2 - pv);
    }
    return Rational(BigInt(quarters), BigInt(4) << n);
}

Rational exact_decisiveness_probability(const Graph& g, Vertex u, Vertex v) {
    require_edge(g, u, v, "exact_decisiveness_probability");
    require_enumerable(g, "exact_decisiveness_probability");
    const auto n = static_cast<std::uint32_t>(g.vertex_count());
    const auto part = neighborhood_partition(g, u, v);
    const std::uint32_t common = mask_of(part.common);
    const std::uint32_t u_only = mask_of(part.u_exclusive);
    const std::uint32_t v_only = mask_of(part.v_exclusive);

    std::uint64_t hits = 0;
    for (std::uint32_t types = 0; types < (1u << n); ++types) {
        const int dc = mask_decisiveness(types, common);
        if (dc > mask_decisiveness(types, u_only) && dc > mask_decisiveness(types, v_only)) ++hits;
    }
    return Rational(BigInt(hits), BigInt(1) << n);
}

} // namespace fsp
