// dynamics.hpp: one-shot simultaneous Flip-Schelling step, monochrome edges,
// decisiveness, and exhaustive exact oracles for small graphs.
#pragma once
#include <cstdint>
#include <vector>

#include "fsp/exactmath.hpp"
#include "fsp/graph.hpp"
#include "fsp/rng.hpp"

namespace fsp {

enum class AgentType : std::uint8_t { Minus = 0, Plus = 1 };

inline constexpr AgentType opposite(AgentType t) noexcept {
    return t == AgentType::Plus ? AgentType::Minus : AgentType::Plus;
}

struct TypeAssignment {
    std::vector<AgentType> types;

    std::size_t size() const noexcept { return types.size(); }
    AgentType operator[](std::size_t v) const { return types[v]; }
    AgentType& operator[](std::size_t v) { return types[v]; }
    bool operator==(const TypeAssignment&) const = default;
};

/// Absolute difference of Plus and Minus counts over each partition class.
struct DecisivenessTriple {
    std::uint32_t d_common = 0;
    std::uint32_t d_u_exclusive = 0;
    std::uint32_t d_v_exclusive = 0;
};

/// Exhaustive enumeration is limited to 2^16 initial assignments.
inline constexpr std::size_t kExactOracleMaxVertices = 16;

/// One fair coin per vertex, in vertex order; Plus on heads.
TypeAssignment initial_types(std::size_t n, RngStream& stream);

/// Every vertex compares against the input assignment: keeps its type with a
/// strict majority of agreeing neighbors, flips with a strict minority, and
/// on a tie flips iff a fair coin comes up heads. Coins are drawn only for tied
/// vertices, in ascending vertex order. Isolated vertices keep their type.
TypeAssignment fsp_step(const Graph& g, const TypeAssignment& t, RngStream& stream);

/// Fraction of edges whose endpoints share a type. Throws DomainError on an edgeless graph.
double monochrome_fraction(const Graph& g, const TypeAssignment& t);

DecisivenessTriple edge_decisiveness(const Graph& g, const TypeAssignment& t, Vertex u, Vertex v);

/// P({u,v} monochrome after one step), averaged over all 2^n initial
/// assignments and the tie coins of u and v.
Rational exact_monochrome_probability(const Graph& g, Vertex u, Vertex v);

/// P(D_common > D_u_exclusive and D_common > D_v_exclusive) over all 2^n assignments.
Rational exact_decisiveness_probability(const Graph& g, Vertex u, Vertex v);

} // namespace fsp
