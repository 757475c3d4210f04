#include "fsp/oracles.hpp"

#include <cstdlib>

#include "fsp/errors.hpp"

namespace fsp::oracle {

std::vector<BigInt> folded_walk_counts_stepwise(std::uint64_t k) {
    // signed[i] counts sequences ending at position i - k
    std::vector<BigInt> signed_counts(2 * k + 1);
    signed_counts[k] = 1;
    for (std::uint64_t step = 0; step < k; ++step) {
        std::vector<BigInt> next(2 * k + 1);
        for (std::uint64_t i = 0; i <= 2 * k; ++i) {
            if (signed_counts[i] == 0) continue;
            next[i - 1] += signed_counts[i];
            next[i + 1] += signed_counts[i];
        }
        signed_counts = std::move(next);
    }
    std::vector<BigInt> folded(k + 1);
    for (std::uint64_t i = 0; i <= 2 * k; ++i) {
        const std::uint64_t m = i >= k ? i - k : k - i;
        folded[m] += signed_counts[i];
    }
    return folded;
}

WalkOutcomeCounts rw_abs_compare_enumerate(std::uint64_t a, std::uint64_t b) {
    if (a + b > 24) throw CapacityError("rw_abs_compare_enumerate: a + b must be at most 24");
    WalkOutcomeCounts out;
    const std::uint64_t total = std::uint64_t{1} << (a + b);
    for (std::uint64_t signs = 0; signs < total; ++signs) {
        long pos_a = 0;
        long pos_b = 0;
        for (std::uint64_t i = 0; i < a + b; ++i) {
            const long step = (signs >> i) & 1u ? 1 : -1;
            if (i < a) pos_a += step;
            else pos_b += step;
        }
        const long abs_a = std::labs(pos_a);
        const long abs_b = std::labs(pos_b);
        if (abs_a < abs_b) ++out.less;
        else if (abs_a == abs_b) ++out.equal;
        else ++out.greater;
    }
    out.total = total;
    return out;
}

std::uint64_t binomial_pmf_argmax(std::uint64_t n, double p) {
    std::uint64_t best = 0;
    double best_value = -1.0;
    for (std::uint64_t k = 0; k <= n; ++k) {
        const double value = binom_pmf(n, p, k);
        if (value > best_value) {
            best_value = value;
            best = k;
        }
    }
    return best;
}

double simulate_edge_monochrome(const Graph& g, Vertex u, Vertex v, std::uint64_t trials, RngStream& stream) {
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const TypeAssignment before = initial_types(g.vertex_count(), stream);
        const TypeAssignment after = fsp_step(g, before, stream);
        hits += after[u] == after[v];
    }
    return static_cast<double>(hits) / static_cast<double>(trials);
}

std::vector<NamedGraph> small_graph_zoo() {
    auto build = [](std::size_t n, std::vector<Edge> edges) { return Graph::from_edges(n, edges); };
    std::vector<NamedGraph> zoo;
    zoo.push_back({"K2", build(2, {{0, 1}})});
    zoo.push_back({"P3", build(3, {{0, 1}, {1, 2}})});
    zoo.push_back({"K3", build(3, {{0, 1}, {0, 2}, {1, 2}})});
    zoo.push_back({"star-4", build(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})});
    zoo.push_back({"C5", build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})});
    zoo.push_back({"C6", build(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}})});
    zoo.push_back({"K4", build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})});
    return zoo;
}

} // namespace fsp::oracle
