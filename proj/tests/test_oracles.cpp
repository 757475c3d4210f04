#include "doctest.h"
#include "fsp/errors.hpp"
#include "fsp/oracles.hpp"

using namespace fsp;

TEST_CASE("stepwise walk counts agree with the closed form") {
    for (std::uint64_t k = 0; k <= 300; k += (k < 20 ? 1 : 37)) {
        CAPTURE(k);
        REQUIRE(oracle::folded_walk_counts_stepwise(k) == folded_walk_counts(k));
    }
}

TEST_CASE("enumeration agrees with exact comparison") {
    for (std::uint64_t a = 0; a <= 9; ++a) {
        for (std::uint64_t b = 0; a + b <= 14; ++b) {
            const auto counts = oracle::rw_abs_compare_enumerate(a, b);
            const auto exact = rw_abs_compare(a, b);
            CAPTURE(a);
            CAPTURE(b);
            REQUIRE(counts.total == (std::uint64_t{1} << (a + b)));
            REQUIRE(Rational(counts.less, counts.total) == exact.less);
            REQUIRE(Rational(counts.equal, counts.total) == exact.equal);
            REQUIRE(Rational(counts.greater, counts.total) == exact.greater);
        }
    }
    CHECK_THROWS_AS(oracle::rw_abs_compare_enumerate(13, 12), CapacityError);
}

TEST_CASE("binomial mode equals the pmf argmax") {
    for (std::uint64_t n : {1u, 2u, 5u, 17u, 64u, 65u, 200u}) {
        for (double p : {0.0, 0.1, 0.25, 0.3, 0.5, 0.77, 0.99}) {
            const auto mode = binomial_mode(n, p);
            const auto argmax = oracle::binomial_pmf_argmax(n, p);
            CAPTURE(n);
            CAPTURE(p);
            // ties between adjacent k are allowed: compare pmf values
            REQUIRE(binom_pmf(n, p, mode) == doctest::Approx(binom_pmf(n, p, argmax)).epsilon(1e-12));
        }
    }
}

TEST_CASE("zoo graphs are valid") {
    const auto zoo = oracle::small_graph_zoo();
    CHECK(zoo.size() == 7);
    for (const auto& g : zoo) {
        CAPTURE(g.name);
        CHECK(g.graph.validate().empty());
        CHECK(g.graph.vertex_count() <= kExactOracleMaxVertices);
    }
}

TEST_CASE("simulation is reproducible") {
    const auto zoo = oracle::small_graph_zoo();
    auto s1 = derive_stream(MasterSeed{1}, "sim", 0);
    auto s2 = derive_stream(MasterSeed{1}, "sim", 0);
    CHECK(oracle::simulate_edge_monochrome(zoo[0].graph, 0, 1, 1000, s1) ==
          oracle::simulate_edge_monochrome(zoo[0].graph, 0, 1, 1000, s2));
}
