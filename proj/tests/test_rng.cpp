#include <cmath>
#include <vector>

#include "doctest.h"
#include "fsp/errors.hpp"
#include "fsp/rng.hpp"

using namespace fsp;

TEST_CASE("derive_stream is a pure function of its origin") {
    auto a = derive_stream(MasterSeed{7}, "rgg", 0);
    auto b = derive_stream(MasterSeed{7}, "rgg", 0);
    for (int i = 0; i < 1000; ++i) REQUIRE(a.next_u64() == b.next_u64());
}

TEST_CASE("distinct origins give distinct sequences") {
    auto first_draws = [](RngStream s) {
        std::vector<std::uint64_t> v;
        for (int i = 0; i < 16; ++i) v.push_back(s.next_u64());
        return v;
    };
    const auto base = first_draws(derive_stream(MasterSeed{7}, "rgg", 0));
    CHECK(base != first_draws(derive_stream(MasterSeed{7}, "rgg", 1)));
    CHECK(first_draws(derive_stream(MasterSeed{7}, "er", 0)) != first_draws(derive_stream(MasterSeed{8}, "er", 0)));
    CHECK(base != first_draws(derive_stream(MasterSeed{7}, "er", 0)));
}

TEST_CASE("derive_seed matches the stream seed") {
    const auto s = derive_stream(MasterSeed{99}, "ctx", 5);
    CHECK(s.seed() == derive_seed(MasterSeed{99}, "ctx", 5));
}

TEST_CASE("fnv1a64 reference values") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("unit uniform stays in [0,1)") {
    auto s = derive_stream(MasterSeed{1}, "uniform", 0);
    for (int i = 0; i < 100000; ++i) {
        const double u = s.next_unit_uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
    }
}

TEST_CASE("degenerate bernoulli probabilities") {
    auto s = derive_stream(MasterSeed{2}, "bern", 0);
    for (int i = 0; i < 10000; ++i) {
        REQUIRE_FALSE(s.next_bernoulli(0.0));
        REQUIRE(s.next_bernoulli(1.0));
    }
}

TEST_CASE("bernoulli rejects probabilities outside [0,1]") {
    auto s = derive_stream(MasterSeed{2}, "bern", 0);
    CHECK_THROWS_AS(s.next_bernoulli(-0.1), ParameterError);
    CHECK_THROWS_AS(s.next_bernoulli(1.5), ParameterError);
    CHECK_THROWS_AS(s.next_bernoulli(NAN), ParameterError);
}

TEST_CASE("fair coin frequency within 4 sigma") {
    auto s = derive_stream(MasterSeed{3}, "coin", 0);
    constexpr int N = 1'000'000;
    int heads = 0;
    for (int i = 0; i < N; ++i) heads += s.next_fair_coin();
    CHECK(std::abs(heads / double(N) - 0.5) <= 0.002);
}

TEST_CASE("bernoulli frequency within 4 sigma") {
    constexpr int N = 1'000'000;
    for (double p : {0.1, 0.5, 0.9}) {
        auto s = derive_stream(MasterSeed{4}, "bern-freq", static_cast<std::uint64_t>(p * 10));
        int hits = 0;
        for (int i = 0; i < N; ++i) hits += s.next_bernoulli(p);
        CAPTURE(p);
        CHECK(std::abs(hits / double(N) - p) <= 4.0 * std::sqrt(p * (1 - p) / N));
    }
}

TEST_CASE("copied stream replays identically") {
    auto s = derive_stream(MasterSeed{5}, "copy", 0);
    s.next_u64();
    auto t = s;
    for (int i = 0; i < 100; ++i) {
        REQUIRE(s.next_unit_uniform() == t.next_unit_uniform());
        REQUIRE(s.next_fair_coin() == t.next_fair_coin());
    }
}
