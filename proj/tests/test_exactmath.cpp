#include <cmath>
#include <numbers>

#include "doctest.h"
#include "fsp/errors.hpp"
#include "fsp/exactmath.hpp"

using namespace fsp;

TEST_CASE("binomial pmf") {
    CHECK(binom_pmf(4, 0.5, 2) == doctest::Approx(0.375).epsilon(1e-15));
    CHECK(binom_pmf(10, 0.0, 0) == 1.0);
    CHECK(binom_pmf(10, 1.0, 10) == 1.0);
    CHECK(binom_pmf(10, 1.0, 9) == 0.0);
    CHECK_THROWS_AS(binom_pmf(3, 0.5, 4), ParameterError);
    CHECK_THROWS_AS(binom_pmf(3, 1.5, 1), ParameterError);

    // large-n path agrees with the exact rational value
    const Rational p(3, 10);
    for (std::uint64_t k : {0u, 10u, 30u, 55u, 100u}) {
        CAPTURE(k);
        const double exact = to_double(binom_pmf_exact(100, p, k));
        CHECK(binom_pmf(100, 0.3, k) == doctest::Approx(exact).epsilon(1e-12));
    }
    for (std::uint64_t n : {1u, 7u, 64u, 65u, 500u}) {
        const auto dist = binom_distribution(n, 0.37);
        CAPTURE(n);
        CHECK(dist.weights.size() == n + 1);
        CHECK(dist.total() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(dist.at(-1) == 0.0);
        CHECK(dist.at(static_cast<std::int64_t>(n) + 1) == 0.0);
    }
}

TEST_CASE("binomial mode") {
    CHECK(binomial_mode(10, 0.5) == 5);
    CHECK(binomial_mode(9, 0.5) == 5);  // tie at 4 and 5
    CHECK(binomial_mode(1, 0.0) == 0);
    CHECK(binomial_mode(100, 0.3) == 30);
    CHECK_THROWS_AS(binomial_mode(0, 0.5), ParameterError);
    CHECK_THROWS_AS(binomial_mode(10, 1.0), ParameterError);
}

TEST_CASE("binomial comparison") {
    // X, Y ~ Bin(2, 1/2): P(X=Y) = (1 + 4 + 1)/16 = 3/8, P(X>=Y) = (1 + 3/8)/2
    const auto e = binom_ge_prob_exact(2, Rational(1, 2), Rational(1, 2));
    CHECK(e.eq == Rational(3, 8));
    CHECK(e.ge == Rational(11, 16));
    CHECK(e.gt == Rational(5, 16));

    const auto d = binom_ge_prob(100, 0.3, 0.3);
    // mpmath reference
    CHECK(d.eq == doctest::Approx(0.0615107192066913).epsilon(1e-12));
    CHECK(d.ge == doctest::Approx(0.5 + d.eq / 2).epsilon(1e-12));

    const auto dom = binom_ge_prob(40, 0.6, 0.4);
    CHECK(dom.ge > 0.5);
    CHECK(dom.gt + dom.eq == doctest::Approx(dom.ge).epsilon(1e-14));
}

TEST_CASE("collision upper bound") {
    // n=50, p=0.2: d=10; mpmath reference, max pmf 0.139819...
    CHECK(binom_collision_upper_bound(50, 0.2) == doctest::Approx(1.17492513825193).epsilon(1e-12));
    double max_pmf = 0.0;
    for (std::uint64_t k = 0; k <= 50; ++k) max_pmf = std::max(max_pmf, binom_pmf(50, 0.2, k));
    CHECK(max_pmf == doctest::Approx(0.139819005174315).epsilon(1e-12));
    CHECK(binom_collision_upper_bound(100, 0.3) == doctest::Approx(3231.53).epsilon(1e-5));
    CHECK_THROWS_AS(binom_collision_upper_bound(10, 0.05), DomainError);  // d = 0
    CHECK_THROWS_AS(binom_collision_upper_bound(10, 0.95), DomainError);  // d = 10
}

TEST_CASE("P(X > 1) and its bound") {
    const auto r = prob_gt_one_and_bound(1000, 0.005);
    CHECK(r.exact == doctest::Approx(0.959909003386836).epsilon(1e-12));
    CHECK(r.bound == doctest::Approx(0.959403447506075).epsilon(1e-12));
    CHECK(r.bound <= r.exact);
    const auto one = prob_gt_one_and_bound(5, 1.0);
    CHECK(one.exact == 1.0);
    CHECK_THROWS_AS(prob_gt_one_and_bound(0, 0.5), ParameterError);
}

TEST_CASE("folded walk counts") {
    CHECK(folded_walk_counts(0) == std::vector<BigInt>{1});
    CHECK(folded_walk_counts(1) == std::vector<BigInt>{0, 2});
    CHECK(folded_walk_counts(2) == std::vector<BigInt>{2, 0, 2});
    CHECK(folded_walk_counts(3) == std::vector<BigInt>{0, 6, 0, 2});
    const auto big = folded_walk_counts(200);
    BigInt total = 0;
    for (const auto& c : big) total += c;
    CHECK(total == BigInt(1) << 200);
    CHECK_THROWS_AS(folded_walk_counts(4001), CapacityError);
}

TEST_CASE("random walk comparison case values") {
    auto check = [](std::uint64_t a, std::uint64_t b, Rational less, Rational equal, Rational greater) {
        const auto c = rw_abs_compare(a, b);
        CAPTURE(a);
        CAPTURE(b);
        CHECK(c.less == less);
        CHECK(c.equal == equal);
        CHECK(c.greater == greater);
    };
    check(0, 0, 0, 1, 0);
    check(1, 1, 0, 1, 0);
    check(0, 2, Rational(1, 2), Rational(1, 2), 0);
    check(1, 2, Rational(1, 2), 0, Rational(1, 2));
    check(2, 2, Rational(1, 4), Rational(1, 2), Rational(1, 4));
    check(3, 3, Rational(3, 16), Rational(5, 8), Rational(3, 16));
    CHECK_THROWS_AS(rw_abs_compare(2000, 2001), CapacityError);
}

TEST_CASE("random walk comparison at capacity") {
    const auto c = rw_abs_compare(2000, 2000);
    CHECK(c.less + c.equal + c.greater == 1);
    CHECK(c.less == c.greater);
    CHECK(to_double(c.less) > 3.0 / 16.0);
}

TEST_CASE("random walk lower bound") {
    CHECK(rw_lower_bound(2, 2) == Rational(1, 4));
    CHECK(rw_lower_bound(0, 0) == Rational(0));  // 1/2 - 1 + 1/2
    for (std::uint64_t b = 0; b <= 30; ++b)
        for (std::uint64_t a = 0; a <= b; ++a) REQUIRE(rw_abs_compare(a, b).less >= rw_lower_bound(a, b));
    CHECK_THROWS_AS(rw_lower_bound(3, 2), ParameterError);
}

TEST_CASE("region measures") {
    const auto m = region_measures(10000, 10, 0.8);
    CHECK(m.mu_common == doctest::Approx(0.000504682043673058).epsilon(1e-12));
    const double disk = 10.0 / 9999.0;
    CHECK(m.mu_common + m.mu_u_exclusive == doctest::Approx(disk).epsilon(1e-14));
    CHECK(m.mu_u_exclusive == m.mu_v_exclusive);
    CHECK(m.mu_common + m.mu_u_exclusive + m.mu_v_exclusive + m.mu_outside == doctest::Approx(1.0).epsilon(1e-15));

    const auto zero = region_measures(10000, 10, 0.0);
    CHECK(zero.mu_common == disk);
    CHECK(zero.mu_u_exclusive == 0.0);
    const auto far = region_measures(10000, 10, 2.0);
    CHECK(far.mu_common == doctest::Approx(0.0).epsilon(1e-18));

    double previous = 1.0;
    for (int i = 0; i <= 200; ++i) {
        const auto r = region_measures(10000, 10, i / 100.0);
        REQUIRE(r.mu_common <= previous + 1e-18);
        REQUIRE(r.mu_common >= 0.0);
        previous = r.mu_common;
    }
    CHECK_THROWS_AS(region_measures(10000, 10, 2.1), ParameterError);
    CHECK_THROWS_AS(region_measures(2, 1.0, 0.5), ParameterError);
}

TEST_CASE("edge within tau fraction") {
    CHECK(edge_within_tau_fraction(0.8) == doctest::Approx(0.64).epsilon(1e-15));
    CHECK(edge_within_tau_fraction(1.0) == 1.0);
    CHECK_THROWS_AS(edge_within_tau_fraction(1.2), ParameterError);
}

TEST_CASE("assembled bound") {
    CHECK(theorem1_bound(2).value == doctest::Approx(0.500030359310790).epsilon(1e-13));
    const auto b = theorem1_bound(10);
    CHECK(b.value == doctest::Approx(0.501116423041172).epsilon(1e-13));
    CHECK(b.asymptotic_factor_dropped);
    CHECK(b.value > 0.5);
    CHECK(b.value < 0.5 + 9.0 / 800.0);
    CHECK_THROWS_AS(theorem1_bound(1.5), DomainError);
}

TEST_CASE("ER common neighborhood") {
    const double p = 10.0 / 9999.0;
    const auto r = er_common_empty_probability(10000, p);
    CHECK(r.complement == doctest::Approx(0.00995017110304977).epsilon(1e-12));
    CHECK(r.bound == doctest::Approx(0.0100020003000400).epsilon(1e-12));
    CHECK(r.complement <= r.bound);
    CHECK(r.exact + r.complement == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(er_common_empty_probability(2, 1.0).exact == 1.0);
    CHECK(er_common_empty_probability(3, 1.0).exact == 0.0);
}
