// oracles.hpp: brute-force reference computations used to cross-check the
// closed forms. Deliberately naive; each takes a different route than the
// routine it checks.
#pragma once
#include <cstdint>
#include <vector>

#include "fsp/dynamics.hpp"
#include "fsp/exactmath.hpp"
#include "fsp/graph.hpp"

namespace fsp::oracle {

/// |position| counts after k steps by stepping the full signed distribution.
std::vector<BigInt> folded_walk_counts_stepwise(std::uint64_t k);

struct WalkOutcomeCounts {
    std::uint64_t less = 0;
    std::uint64_t equal = 0;
    std::uint64_t greater = 0;
    std::uint64_t total = 0;
};

/// Enumerates all 2^(a+b) sign sequences. Throws CapacityError for a + b > 24.
WalkOutcomeCounts rw_abs_compare_enumerate(std::uint64_t a, std::uint64_t b);

/// Smallest k maximizing binom_pmf(n, p, k), by scanning every k.
std::uint64_t binomial_pmf_argmax(std::uint64_t n, double p);

/// Monte Carlo estimate of P({u,v} monochrome after one step) on a fixed graph.
double simulate_edge_monochrome(const Graph& g, Vertex u, Vertex v, std::uint64_t trials, RngStream& stream);

/// The fixed small graphs the exhaustive oracles are run on:
/// K2, P3, K3, star with 4 leaves, C5, C6, K4.
struct NamedGraph {
    const char* name;
    Graph graph;
};
std::vector<NamedGraph> small_graph_zoo();

} // namespace fsp::oracle
