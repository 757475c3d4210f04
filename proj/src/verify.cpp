#include "fsp/verify.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "fsp/dynamics.hpp"
#include "fsp/exactmath.hpp"
#include "fsp/graph.hpp"
#include "fsp/oracles.hpp"

namespace fsp {

namespace {

// Collects the first few counterexamples of a sweep.
class Failures {
public:
    template <class... Args>
    void add(Args&&... parts) {
        ++count_;
        if (count_ > 5) return;
        std::ostringstream os;
        (os << ... << parts);
        if (!text_.empty()) text_ += "; ";
        text_ += os.str();
    }

    CheckResult result(std::string name, std::string ok_detail) const {
        if (count_ == 0) return {std::move(name), true, std::move(ok_detail)};
        return {std::move(name), false, std::to_string(count_) + " violation(s): " + text_};
    }

private:
    std::size_t count_ = 0;
    std::string text_;
};

CheckResult rw_case_values() {
    struct Case {
        unsigned a, b;
        Rational less;
    };
    const Case cases[] = {{0, 2, Rational(1, 2)}, {0, 4, Rational(5, 8)}, {1, 3, Rational(1, 4)},
                          {2, 2, Rational(1, 4)}, {3, 3, Rational(3, 16)}, {0, 0, Rational(0)},
                          {1, 1, Rational(0)}};
    Failures f;
    for (const auto& c : cases) {
        const auto got = rw_abs_compare(c.a, c.b).less;
        if (got != c.less) f.add("(", c.a, ",", c.b, ") gave ", got, " expected ", c.less);
    }
    return f.result("rw.case_values", "7 exact case values reproduced");
}

CheckResult rw_sweep() {
    const Rational floor_value(3, 16);
    Failures f;
    for (unsigned b = 0; b <= 60; ++b) {
        for (unsigned a = 0; a <= b; ++a) {
            const auto cmp = rw_abs_compare(a, b);
            if (cmp.less + cmp.equal + cmp.greater != 1) f.add("(", a, ",", b, ") does not sum to 1");
            if (cmp.less < cmp.greater) f.add("(", a, ",", b, ") less < greater");
            if (cmp.less < rw_lower_bound(a, b)) f.add("(", a, ",", b, ") below rw_lower_bound");
            const bool degenerate = a == b && a <= 1;
            if (!degenerate && cmp.less < floor_value) f.add("(", a, ",", b, ") below 3/16");
        }
    }
    return f.result("rw.sweep_0_60", "1891 pairs: >= 3/16, >= lower bound, >= P(|A|>|B|)");
}

CheckResult rw_enumeration() {
    Failures f;
    for (unsigned a = 0; a <= 16; ++a) {
        for (unsigned b = 0; a + b <= 16; ++b) {
            const auto exact = rw_abs_compare(a, b);
            const auto brute = oracle::rw_abs_compare_enumerate(a, b);
            const BigInt total(brute.total);
            if (exact.less != Rational(BigInt(brute.less), total) ||
                exact.equal != Rational(BigInt(brute.equal), total) ||
                exact.greater != Rational(BigInt(brute.greater), total)) {
                f.add("(", a, ",", b, ") disagrees with sign enumeration");
            }
        }
    }
    return f.result("rw.enumeration_cross_check", "all a+b <= 16 match 2^(a+b) sign enumeration");
}

CheckResult rw_stepwise() {
    Failures f;
    for (unsigned k = 0; k <= 120; ++k) {
        if (folded_walk_counts(k) != oracle::folded_walk_counts_stepwise(k)) f.add("k=", k);
    }
    return f.result("rw.stepwise_dp_cross_check", "folded counts match stepwise DP for k <= 120");
}

CheckResult decision_tree() {
    Failures f;
    std::size_t edges = 0;
    for (const auto& [name, g] : oracle::small_graph_zoo()) {
        for (auto [u, v] : g.edges()) {
            ++edges;
            const Rational mono = exact_monochrome_probability(g, u, v);
            const Rational dec = exact_decisiveness_probability(g, u, v);
            if (mono < Rational(1, 2) + dec / 2) {
                f.add(name, " edge (", u, ",", v, "): P(mono)=", mono, " < 1/2 + ", dec, "/2");
            }
        }
    }
    return f.result("fsp.decision_tree_bound", std::to_string(edges) + " edges satisfy P(mono) >= 1/2 + P(D)/2");
}

CheckResult k2_half() {
    const auto k2 = oracle::small_graph_zoo().front().graph;
    Failures f;
    const auto p = exact_monochrome_probability(k2, 0, 1);
    if (p != Rational(1, 2)) f.add("K2 gave ", p);
    return f.result("fsp.k2_exact_half", "K2 edge monochrome with probability exactly 1/2");
}

CheckResult flip_symmetry() {
    Failures f;
    for (std::uint64_t trial = 0; trial < 50; ++trial) {
        RngStream gs = derive_stream(MasterSeed{1}, "verify|symmetry|graph", trial);
        const Graph g = generate_er_with_probability(60, 0.08, gs);
        RngStream ts = derive_stream(MasterSeed{1}, "verify|symmetry|types", trial);
        const TypeAssignment t = initial_types(60, ts);
        TypeAssignment inverted = t;
        for (auto& x : inverted.types) x = opposite(x);

        RngStream s1 = derive_stream(MasterSeed{1}, "verify|symmetry|step", trial);
        RngStream s2 = s1;
        const TypeAssignment out = fsp_step(g, t, s1);
        TypeAssignment out_inv = fsp_step(g, inverted, s2);
        for (auto& x : out_inv.types) x = opposite(x);
        if (out != out_inv) f.add("trial ", trial, ": step does not commute with inversion");
        if (g.edge_count() > 0 && monochrome_fraction(g, t) != monochrome_fraction(g, inverted)) {
            f.add("trial ", trial, ": monochrome fraction changed under inversion");
        }
    }
    return f.result("fsp.type_flip_symmetry", "50 random graphs");
}

CheckResult binomial_mode_sweep() {
    Failures f;
    for (unsigned n = 1; n <= 60; ++n) {
        for (int i = 1; i <= 99; ++i) {
            const double p = i / 100.0;
            const auto mode = binomial_mode(n, p);
            const double at_mode = binom_pmf(n, p, mode);
            const double best = binom_pmf(n, p, oracle::binomial_pmf_argmax(n, p));
            if (mode > n || at_mode < best * (1.0 - 1e-12)) f.add("n=", n, " p=", p, " mode=", mode);
        }
    }
    return f.result("binom.mode_is_argmax", "n <= 60, p in {0.01..0.99}");
}

CheckResult binomial_dominance() {
    Failures f;
    for (unsigned n = 1; n <= 40; ++n) {
        for (int i = 1; i <= 19; ++i) {
            for (int j = 1; j <= i; ++j) {
                const double p = i * 0.05;
                const double q = j * 0.05;
                const auto cmp = binom_ge_prob(n, p, q);
                if (cmp.ge < 0.5 - 1e-12) f.add("n=", n, " p=", p, " q=", q, " P(X>=Y)=", cmp.ge);
            }
        }
    }
    return f.result("binom.dominance", "P(X>=Y) >= 1/2 for p >= q, n <= 40");
}

CheckResult binomial_collision() {
    Failures f;
    std::size_t checked = 0;
    for (unsigned n = 1; n <= 40; ++n) {
        for (int i = 1; i <= 19; ++i) {
            const double p = i * 0.05;
            const auto d = static_cast<unsigned>(std::floor(p * (n + 1)));
            if (d < 2 || d >= n) continue;
            const double bound = binom_collision_upper_bound(n, p);
            for (int j = 1; j <= i; ++j) {
                ++checked;
                const double eq = binom_ge_prob(n, p, j * 0.05).eq;
                if (eq > bound) f.add("n=", n, " p=", p, " q=", j * 0.05);
            }
        }
    }
    return f.result("binom.collision_bound", std::to_string(checked) + " (n,p,q) with 2 <= d < n");
}

CheckResult binomial_gt_one() {
    Failures f;
    for (unsigned n : {100u, 1000u, 10000u}) {
        for (int i = 1; i <= 40; ++i) {
            const double c = 0.5 * i;
            const auto r = prob_gt_one_and_bound(n, c / n);
            if (r.exact < r.bound - 1e-12) f.add("n=", n, " c=", c);
        }
    }
    return f.result("binom.prob_gt_one", "exact P(X>1) >= closed form for c in {0.5..20}");
}

CheckResult region_sweep() {
    Failures f;
    const std::uint64_t n = 10000;
    const double degree = 10.0;
    const double disk = degree / (n - 1);
    double previous = INFINITY;
    for (int i = 0; i <= 2000; ++i) {
        const double tau = i * 1e-3;
        const auto m = region_measures(n, degree, tau);
        const double sum = m.mu_common + m.mu_u_exclusive + m.mu_v_exclusive + m.mu_outside;
        if (std::abs(sum - 1.0) > 1e-12) f.add("tau=", tau, " sum=", sum);
        if (m.mu_u_exclusive != m.mu_v_exclusive) f.add("tau=", tau, " asymmetric");
        if (std::abs(m.mu_common + m.mu_u_exclusive - disk) > 1e-15) f.add("tau=", tau, " disk identity");
        if (m.mu_common < 0 || m.mu_u_exclusive < 0 || m.mu_outside < 0) f.add("tau=", tau, " negative");
        if (i > 0 && i < 2000 && !(m.mu_common < previous)) f.add("tau=", tau, " not decreasing");
        previous = m.mu_common;
    }
    const auto four_fifths = region_measures(n, degree, 0.8);
    if (four_fifths.mu_common < four_fifths.mu_u_exclusive) f.add("tau=4/5: common below exclusive");
    return f.result("region.invariants", "tau sweep over [0,2] step 1e-3");
}

CheckResult theorem1_sweep() {
    Failures f;
    double previous = 0.0;
    for (int d = 2; d <= 200; ++d) {
        const double value = theorem1_bound(d).value;
        if (!(value > 0.5)) f.add("d=", d, " not above 1/2");
        if (d > 2 && value < previous) f.add("d=", d, " decreased");
        previous = value;
    }
    const auto far = theorem1_bound(1e6);
    if (std::abs(far.degree_factor - 0.25) > 1e-3 || std::abs(far.neighborhood_factor - 1.0) > 1e-12) {
        f.add("limits not approached at d=1e6");
    }
    return f.result("bound.theorem1_monotone", "d in [2,200], factors tend to 1/4 and 1");
}

CheckResult er_common_empty() {
    Failures f;
    for (std::uint64_t n : {100ull, 1000ull, 10000ull, 100000ull}) {
        for (double degree : {1.0, 4.0, 10.0, 16.0}) {
            const double p = degree / static_cast<double>(n - 1);
            const auto r = er_common_empty_probability(n, p);
            if (r.complement > r.bound) f.add("n=", n, " d=", degree);
        }
    }
    return f.result("er.common_empty_bound", "1 - (1-p^2)^(n-2) <= n p^2");
}

} // namespace

std::vector<CheckResult> run_property_sweeps(const std::function<void(const CheckResult&)>& on_result) {
    using Check = CheckResult (*)();
    const Check checks[] = {rw_case_values,    rw_sweep,           rw_enumeration,     rw_stepwise,
                            decision_tree,      k2_half,            flip_symmetry,      binomial_mode_sweep,
                            binomial_dominance, binomial_collision, binomial_gt_one,    region_sweep,
                            theorem1_sweep,     er_common_empty};
    std::vector<CheckResult> results;
    for (Check check : checks) {
        CheckResult r;
        try {
            r = check();
        } catch (const std::exception& e) {
            r = {"(exception)", false, e.what()};
        }
        if (on_result) on_result(r);
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace fsp
