#include <cmath>

#include "doctest.h"
#include "fsp/dynamics.hpp"
#include "fsp/errors.hpp"
#include "fsp/oracles.hpp"

using namespace fsp;

namespace {

constexpr AgentType P = AgentType::Plus;
constexpr AgentType M = AgentType::Minus;

Graph make(std::size_t n, std::vector<Edge> edges) { return Graph::from_edges(n, edges); }

const Graph& zoo(const char* name) {
    static const auto graphs = oracle::small_graph_zoo();
    for (const auto& g : graphs)
        if (std::string(g.name) == name) return g.graph;
    throw std::out_of_range(name);
}

} // namespace

TEST_CASE("initial types") {
    auto s = derive_stream(MasterSeed{1}, "types", 0);
    auto copy = s;
    const auto t = initial_types(1'000'000, s);
    std::size_t plus = 0;
    for (auto x : t.types) plus += x == P;
    CHECK(std::abs(plus / 1e6 - 0.5) <= 0.002);
    CHECK(initial_types(1'000'000, copy) == t);
    CHECK(initial_types(1, s).size() == 1);
}

TEST_CASE("fsp_step worked examples") {
    auto s = derive_stream(MasterSeed{2}, "step", 0);
    SUBCASE("unanimous triangle keeps") {
        const TypeAssignment t{{P, P, P}};
        CHECK(fsp_step(zoo("K3"), t, s) == t);
    }
    SUBCASE("bichrome K2 swaps") {
        CHECK(fsp_step(zoo("K2"), TypeAssignment{{P, M}}, s) == TypeAssignment{{M, P}});
    }
    SUBCASE("star with minority center") {
        const Graph star = make(4, {{0, 1}, {0, 2}, {0, 3}});
        CHECK(fsp_step(star, TypeAssignment{{M, P, P, P}}, s) == TypeAssignment{{P, M, M, M}});
    }
    SUBCASE("isolated vertex keeps its type") {
        const Graph g = make(3, {{0, 1}});
        const auto out = fsp_step(g, TypeAssignment{{P, P, M}}, s);
        CHECK(out[2] == M);
    }
    SUBCASE("size mismatch") {
        CHECK_THROWS_AS(fsp_step(zoo("K3"), TypeAssignment{{P, P}}, s), ParameterError);
    }
}

TEST_CASE("tie coins go to tied vertices in ascending order") {
    // C4 with types (+,+,+,-): vertices 0 and 2 are tied, 1 keeps, 3 flips.
    const Graph c4 = make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    const TypeAssignment t{{P, P, P, M}};
    for (std::uint64_t trial = 0; trial < 32; ++trial) {
        auto s = derive_stream(MasterSeed{3}, "ties", trial);
        auto coins = s;
        const auto out = fsp_step(c4, t, s);
        const bool c0 = coins.next_fair_coin();
        const bool c2 = coins.next_fair_coin();
        REQUIRE(out[0] == (c0 ? M : P));
        REQUIRE(out[1] == P);
        REQUIRE(out[2] == (c2 ? M : P));
        REQUIRE(out[3] == P);
        REQUIRE(s.next_u64() == coins.next_u64());  // exactly two coins consumed
    }
}

TEST_CASE("no coins consumed without ties") {
    auto s = derive_stream(MasterSeed{4}, "noties", 0);
    auto reference = s;
    fsp_step(zoo("K3"), TypeAssignment{{P, P, M}}, s);  // vertex 2 flips, 0 and 1 tie
    reference.next_fair_coin();
    reference.next_fair_coin();
    CHECK(s.next_u64() == reference.next_u64());

    auto s2 = derive_stream(MasterSeed{4}, "noties", 1);
    auto ref2 = s2;
    fsp_step(zoo("K2"), TypeAssignment{{P, M}}, s2);
    CHECK(s2.next_u64() == ref2.next_u64());
}

TEST_CASE("global inversion commutes with the step") {
    for (std::uint64_t trial = 0; trial < 20; ++trial) {
        auto gs = derive_stream(MasterSeed{5}, "inv-graph", trial);
        const Graph g = generate_er_with_probability(100, 0.05, gs);
        auto ts = derive_stream(MasterSeed{5}, "inv-types", trial);
        const auto t = initial_types(100, ts);
        TypeAssignment inv = t;
        for (auto& x : inv.types) x = opposite(x);
        auto s1 = derive_stream(MasterSeed{5}, "inv-step", trial);
        auto s2 = s1;
        auto a = fsp_step(g, t, s1);
        auto b = fsp_step(g, inv, s2);
        for (auto& x : b.types) x = opposite(x);
        REQUIRE(a == b);
        if (g.edge_count() > 0) REQUIRE(monochrome_fraction(g, t) == monochrome_fraction(g, inv));
    }
}

TEST_CASE("monochrome fraction") {
    CHECK(monochrome_fraction(zoo("K3"), TypeAssignment{{P, P, P}}) == 1.0);
    CHECK(monochrome_fraction(zoo("K2"), TypeAssignment{{P, M}}) == 0.0);
    const Graph c4 = make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(monochrome_fraction(c4, TypeAssignment{{P, M, P, M}}) == 0.0);
    CHECK(monochrome_fraction(c4, TypeAssignment{{P, P, M, M}}) == 0.5);
    CHECK_THROWS_AS(monochrome_fraction(make(3, {}), TypeAssignment{{P, P, P}}), DomainError);
}

TEST_CASE("initial monochrome fraction averages 1/2") {
    auto gs = derive_stream(MasterSeed{6}, "mono-graph", 0);
    const Graph g = generate_er(10000, 10, gs);
    double total = 0.0;
    for (std::uint64_t t = 0; t < 20; ++t) {
        auto ts = derive_stream(MasterSeed{6}, "mono-types", t);
        total += monochrome_fraction(g, initial_types(10000, ts));
    }
    CHECK(std::abs(total / 20 - 0.5) <= 0.01);
}

TEST_CASE("edge decisiveness") {
    const auto d = edge_decisiveness(zoo("K3"), TypeAssignment{{P, M, P}}, 0, 1);
    CHECK(d.d_common == 1);
    CHECK(d.d_u_exclusive == 0);
    CHECK(d.d_v_exclusive == 0);

    CHECK(edge_decisiveness(zoo("K2"), TypeAssignment{{P, P}}, 0, 1).d_common == 0);

    // u=0, v=1, common neighbors 2..6 with four Plus and one Minus
    std::vector<Edge> edges{{0, 1}};
    for (Vertex w = 2; w <= 6; ++w) {
        edges.emplace_back(0, w);
        edges.emplace_back(1, w);
    }
    edges.emplace_back(0, 7);
    const Graph g = make(8, edges);
    const TypeAssignment t{{P, P, P, P, P, P, M, M}};
    const auto dd = edge_decisiveness(g, t, 0, 1);
    CHECK(dd.d_common == 3);
    CHECK(dd.d_u_exclusive == 1);
    CHECK(dd.d_v_exclusive == 0);

    CHECK_THROWS_AS(edge_decisiveness(zoo("P3"), TypeAssignment{{P, P, P}}, 0, 2), ParameterError);
}

TEST_CASE("decisiveness parity matches class size") {
    auto gs = derive_stream(MasterSeed{7}, "parity", 0);
    const Graph g = generate_er_with_probability(60, 0.15, gs);
    auto ts = derive_stream(MasterSeed{7}, "parity-types", 0);
    const auto t = initial_types(60, ts);
    for (auto [u, v] : g.edges()) {
        const auto part = neighborhood_partition(g, u, v);
        const auto d = edge_decisiveness(g, t, u, v);
        REQUIRE(d.d_common <= part.common.size());
        REQUIRE((d.d_common + part.common.size()) % 2 == 0);
        REQUIRE((d.d_u_exclusive + part.u_exclusive.size()) % 2 == 0);
        REQUIRE((d.d_v_exclusive + part.v_exclusive.size()) % 2 == 0);
    }
}

TEST_CASE("exact oracle values") {
    // K2: equal types persist, unequal types both flip.
    CHECK(exact_monochrome_probability(zoo("K2"), 0, 1) == Rational(1, 2));
    // K3 by hand: 2 unanimous assignments stay monochrome; in the other 6 the
    // edge's endpoints end up independent fair coins or one coin, so 1/2 each.
    CHECK(exact_monochrome_probability(zoo("K3"), 0, 1) == Rational(5, 8));
    CHECK(exact_decisiveness_probability(zoo("K2"), 0, 1) == 0);
    CHECK(exact_decisiveness_probability(zoo("K3"), 0, 1) == 1);
    // K4: common = the other two vertices, exclusives empty; D_common > 0 iff they agree.
    CHECK(exact_decisiveness_probability(zoo("K4"), 0, 1) == Rational(1, 2));
    CHECK(exact_monochrome_probability(zoo("K4"), 2, 3) == Rational(3, 4));
}

TEST_CASE("exact oracle errors") {
    CHECK_THROWS_AS(exact_monochrome_probability(zoo("P3"), 0, 2), ParameterError);
    auto s = derive_stream(MasterSeed{8}, "big", 0);
    const Graph big = generate_er_with_probability(17, 0.5, s);
    const auto e = big.edges().front();
    CHECK_THROWS_AS(exact_monochrome_probability(big, e.first, e.second), CapacityError);
    CHECK_THROWS_AS(exact_decisiveness_probability(big, e.first, e.second), CapacityError);
}

TEST_CASE("exact oracle agrees with simulation") {
    const Graph house = make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}});
    struct Case {
        const Graph* g;
        Vertex u, v;
    };
    const Case cases[] = {{&zoo("K4"), 0, 1}, {&zoo("C5"), 0, 1}, {&house, 0, 1}, {&house, 2, 3}};
    std::uint64_t idx = 0;
    for (const auto& c : cases) {
        const double exact = to_double(exact_monochrome_probability(*c.g, c.u, c.v));
        auto s = derive_stream(MasterSeed{9}, "mc", idx++);
        constexpr std::uint64_t N = 1'000'000;
        const double est = oracle::simulate_edge_monochrome(*c.g, c.u, c.v, N, s);
        CAPTURE(exact);
        CHECK(std::abs(est - exact) <= 4.0 * std::sqrt(exact * (1 - exact) / N));
    }
}
