#include "fsp/exactmath.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fsp/errors.hpp"

namespace fsp {

double to_double(const Rational& q) { return q.convert_to<double>(); }

double DiscreteDistribution::at(std::int64_t value) const {
    const std::int64_t i = value - offset;
    if (i < 0 || i >= static_cast<std::int64_t>(weights.size())) return 0.0;
    return weights[static_cast<std::size_t>(i)];
}

double DiscreteDistribution::total() const {
    long double s = 0.0L;
    for (double w : weights) s += w;
    return static_cast<double>(s);
}

namespace {

void check_probability(double p, const char* where) {
    if (!(p >= 0.0 && p <= 1.0)) throw ParameterError(std::string(where) + ": probability outside [0,1]");
}

void check_probability(const Rational& p, const char* where) {
    if (p < 0 || p > 1) throw ParameterError(std::string(where) + ": probability outside [0,1]");
}

// Exact C(n, k) for n <= 64.
std::uint64_t small_binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n - k) k = n - k;
    unsigned __int128 c = 1;
    for (std::uint64_t i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
    return static_cast<std::uint64_t>(c);
}

long double pmf_long(std::uint64_t n, long double p, std::uint64_t k) {
    if (p == 0.0L) return k == 0 ? 1.0L : 0.0L;
    if (p == 1.0L) return k == n ? 1.0L : 0.0L;
    const auto kk = static_cast<long double>(k);
    const auto rest = static_cast<long double>(n - k);
    if (n <= 64) {
        return static_cast<long double>(small_binomial(n, k)) * std::pow(p, kk) * std::pow(1.0L - p, rest);
    }
    const long double log_coeff = std::lgamma(static_cast<long double>(n) + 1.0L) - std::lgamma(kk + 1.0L) -
                                  std::lgamma(rest + 1.0L);
    return std::exp(log_coeff + kk * std::log(p) + rest * std::log1p(-p));
}

std::vector<long double> pmf_row(std::uint64_t n, double p) {
    std::vector<long double> row(n + 1);
    for (std::uint64_t k = 0; k <= n; ++k) row[k] = pmf_long(n, p, k);
    return row;
}

std::vector<Rational> pmf_row_exact(std::uint64_t n, const Rational& p) {
    const Rational q = 1 - p;
    std::vector<Rational> p_pow(n + 1, Rational(1));
    std::vector<Rational> q_pow(n + 1, Rational(1));
    for (std::uint64_t i = 1; i <= n; ++i) {
        p_pow[i] = p_pow[i - 1] * p;
        q_pow[i] = q_pow[i - 1] * q;
    }
    std::vector<Rational> row(n + 1);
    BigInt coeff = 1;
    for (std::uint64_t k = 0; k <= n; ++k) {
        row[k] = Rational(coeff) * p_pow[k] * q_pow[n - k];
        coeff = coeff * (n - k) / (k + 1);
    }
    return row;
}

// C(k, j) for j = 0..k.
std::vector<BigInt> binomial_row(std::uint64_t k) {
    std::vector<BigInt> row(k + 1);
    BigInt c = 1;
    for (std::uint64_t j = 0; j <= k; ++j) {
        row[j] = c;
        c = c * (k - j) / (j + 1);
    }
    return row;
}

Rational central_pmf_half(std::uint64_t k) {
    // P(Bin(k, 1/2) = k/2), zero for odd k
    if (k % 2 != 0) return Rational(0);
    return Rational(binomial_row(k)[k / 2], BigInt(1) << k);
}

} // namespace

double binom_pmf(std::uint64_t n, double p, std::uint64_t k) {
    check_probability(p, "binom_pmf");
    if (k > n) throw ParameterError("binom_pmf: k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
    return static_cast<double>(pmf_long(n, p, k));
}

DiscreteDistribution binom_distribution(std::uint64_t n, double p) {
    check_probability(p, "binom_distribution");
    DiscreteDistribution d;
    d.weights.reserve(n + 1);
    for (long double w : pmf_row(n, p)) d.weights.push_back(static_cast<double>(w));
    return d;
}

Rational binom_pmf_exact(std::uint64_t n, const Rational& p, std::uint64_t k) {
    check_probability(p, "binom_pmf_exact");
    if (k > n) throw ParameterError("binom_pmf_exact: k exceeds n");
    return pmf_row_exact(n, p)[k];
}

std::uint64_t binomial_mode(std::uint64_t n, double p) {
    if (n < 1) throw ParameterError("binomial_mode: need n >= 1");
    if (!(p >= 0.0 && p < 1.0)) throw ParameterError("binomial_mode: need 0 <= p < 1");
    return static_cast<std::uint64_t>(std::floor(p * static_cast<double>(n + 1)));
}

BinomialComparison<double> binom_ge_prob(std::uint64_t n, double p, double q) {
    check_probability(p, "binom_ge_prob");
    check_probability(q, "binom_ge_prob");
    const auto px = pmf_row(n, p);
    const auto py = pmf_row(n, q);
    long double eq = 0.0L;
    long double gt = 0.0L;
    long double y_below = 0.0L;  // P(Y < i)
    for (std::uint64_t i = 0; i <= n; ++i) {
        eq += px[i] * py[i];
        gt += px[i] * y_below;
        y_below += py[i];
    }
    return {static_cast<double>(gt + eq), static_cast<double>(gt), static_cast<double>(eq)};
}

BinomialComparison<Rational> binom_ge_prob_exact(std::uint64_t n, const Rational& p, const Rational& q) {
    check_probability(p, "binom_ge_prob_exact");
    check_probability(q, "binom_ge_prob_exact");
    const auto px = pmf_row_exact(n, p);
    const auto py = pmf_row_exact(n, q);
    BinomialComparison<Rational> out;
    Rational y_below = 0;
    for (std::uint64_t i = 0; i <= n; ++i) {
        out.eq += px[i] * py[i];
        out.gt += px[i] * y_below;
        y_below += py[i];
    }
    out.ge = out.gt + out.eq;
    return out;
}

double binom_collision_upper_bound(std::uint64_t n, double p) {
    check_probability(p, "binom_collision_upper_bound");
    const auto d = static_cast<std::uint64_t>(std::floor(p * static_cast<double>(n + 1)));
    if (d < 2 || d >= n) {
        throw DomainError("binom_collision_upper_bound: d=floor(p(n+1))=" + std::to_string(d) +
                          " outside [2, n) for n=" + std::to_string(n));
    }
    const auto dd = static_cast<double>(d);
    return 1.0 / (std::sqrt(2.0 * std::numbers::pi * dd) * std::pow(1.0 - dd / static_cast<double>(n), dd));
}

ProbGtOne prob_gt_one_and_bound(std::uint64_t n, double p) {
    if (n < 1) throw ParameterError("prob_gt_one_and_bound: need n >= 1");
    check_probability(p, "prob_gt_one_and_bound");
    const auto nd = static_cast<double>(n);
    ProbGtOne out;
    if (p == 1.0) {
        out.exact = n >= 2 ? 1.0 : 0.0;
    } else {
        const double log_q = std::log1p(-p);
        out.exact = 1.0 - std::exp(nd * log_q) - nd * p * std::exp((nd - 1.0) * log_q);
    }
    const double c = p * nd;
    out.bound = 1.0 - std::exp(-c) * (1.0 + c * std::exp(c / nd));
    return out;
}

std::vector<BigInt> folded_walk_counts(std::uint64_t k) {
    if (k > kRandomWalkCapacity) throw CapacityError("folded_walk_counts: more than 4000 steps");
    // position 2j - k has C(k, j) sequences; fold j and k - j together
    const auto row = binomial_row(k);
    std::vector<BigInt> folded(k + 1);
    for (std::uint64_t j = 0; j <= k; ++j) {
        const std::uint64_t m = 2 * j >= k ? 2 * j - k : k - 2 * j;
        folded[m] += row[j];
    }
    return folded;
}

RandomWalkComparison rw_abs_compare(std::uint64_t a, std::uint64_t b) {
    if (a + b > kRandomWalkCapacity) {
        throw CapacityError("rw_abs_compare: a + b = " + std::to_string(a + b) + " exceeds 4000");
    }
    const auto fa = folded_walk_counts(a);
    const auto fb = folded_walk_counts(b);

    // suffix[m] = number of B-sequences with |B| >= m
    std::vector<BigInt> suffix(b + 2);
    for (std::uint64_t m = b + 1; m-- > 0;) suffix[m] = suffix[m + 1] + fb[m];

    BigInt less = 0;
    BigInt equal = 0;
    for (std::uint64_t m = 0; m <= a; ++m) {
        if (fa[m] == 0) continue;
        less += fa[m] * suffix[std::min<std::uint64_t>(m + 1, b + 1)];
        if (m <= b) equal += fa[m] * fb[m];
    }
    const BigInt total = BigInt(1) << (a + b);
    RandomWalkComparison out;
    out.less = Rational(less, total);
    out.equal = Rational(equal, total);
    out.greater = Rational(total - less - equal, total);
    return out;
}

Rational rw_lower_bound(std::uint64_t a, std::uint64_t b) {
    if (a > b) throw ParameterError("rw_lower_bound: need a <= b");
    if (a + b > kRandomWalkCapacity) throw CapacityError("rw_lower_bound: a + b exceeds 4000");
    return Rational(1, 2) - central_pmf_half(a + b) + central_pmf_half(a) * central_pmf_half(b) / 2;
}

RegionMeasures region_measures(std::uint64_t n, double avg_degree, double tau) {
    if (n < 2) throw ParameterError("region_measures: need n >= 2");
    if (!(avg_degree > 0.0)) throw ParameterError("region_measures: average degree must be positive");
    if (!(tau >= 0.0 && tau <= 2.0)) throw ParameterError("region_measures: tau outside [0,2]");
    const double disk = avg_degree / static_cast<double>(n - 1);
    if (disk > std::numbers::pi / 4.0) throw ParameterError("region_measures: disk radius exceeds 1/2");

    RegionMeasures m;
    m.tau = tau;
    if (tau == 0.0) {
        m.mu_common = disk;
    } else {
        const double angle = 2.0 * std::acos(tau / 2.0);
        m.mu_common = disk / std::numbers::pi * (angle - std::sin(angle));
    }
    m.mu_u_exclusive = std::max(0.0, disk - m.mu_common);
    m.mu_v_exclusive = m.mu_u_exclusive;
    m.mu_outside = 1.0 - m.mu_common - 2.0 * m.mu_u_exclusive;
    return m;
}

double edge_within_tau_fraction(double tau) {
    if (!(tau >= 0.0 && tau <= 1.0)) throw ParameterError("edge_within_tau_fraction: tau outside [0,1]");
    return tau * tau;
}

Theorem1Bound theorem1_bound(double avg_degree) {
    if (!(avg_degree >= 2.0)) throw DomainError("theorem1_bound: average degree must be at least 2");
    const double half = std::floor(avg_degree / 2.0);
    const double shortfall = 0.5 - 1.0 / std::sqrt(2.0 * std::numbers::pi * half);
    Theorem1Bound b;
    b.degree_factor = shortfall * shortfall;
    b.neighborhood_factor = 1.0 - std::exp(-avg_degree / 2.0) * (1.0 + avg_degree / 2.0);
    b.value = 0.5 + 9.0 / 800.0 * b.degree_factor * b.neighborhood_factor;
    return b;
}

ErCommonEmpty er_common_empty_probability(std::uint64_t n, double p) {
    if (n < 2) throw ParameterError("er_common_empty_probability: need n >= 2");
    check_probability(p, "er_common_empty_probability");
    const auto others = static_cast<double>(n - 2);
    ErCommonEmpty out;
    if (p == 1.0) {
        out.exact = n == 2 ? 1.0 : 0.0;
        out.complement = 1.0 - out.exact;
    } else {
        const double log_q = std::log1p(-p * p);
        out.exact = std::exp(others * log_q);
        out.complement = -std::expm1(others * log_q);
    }
    out.bound = static_cast<double>(n) * p * p;
    return out;
}

} // namespace fsp
