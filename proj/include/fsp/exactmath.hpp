// exactmath.hpp: closed forms and exact evaluations for binomial laws,
// ±1 random walks, torus disk-lens geometry, and the assembled bounds.
#pragma once
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fsp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& q);

/// Probabilities indexed from `offset`.
struct DiscreteDistribution {
    std::int64_t offset = 0;
    std::vector<double> weights;

    double at(std::int64_t value) const;
    double total() const;
};

// ---------------------------------------------------------------------------
// Binomial laws
//
// Floating-point routines use exact integer binomial coefficients for n <= 64
// and log-gamma evaluation in long double above that (relative error well
// below 1e-12 for the sizes used here). The *_exact overloads take rational
// p and return rationals.

double binom_pmf(std::uint64_t n, double p, std::uint64_t k);
DiscreteDistribution binom_distribution(std::uint64_t n, double p);
Rational binom_pmf_exact(std::uint64_t n, const Rational& p, std::uint64_t k);

/// floor(p (n+1)), a mode of Bin(n, p). Requires n >= 1 and 0 <= p < 1.
std::uint64_t binomial_mode(std::uint64_t n, double p);

template <class T>
struct BinomialComparison {
    T ge{};  ///< P(X >= Y)
    T gt{};  ///< P(X > Y)
    T eq{};  ///< P(X = Y)
};

/// X ~ Bin(n, p), Y ~ Bin(n, q) independent.
BinomialComparison<double> binom_ge_prob(std::uint64_t n, double p, double q);
BinomialComparison<Rational> binom_ge_prob_exact(std::uint64_t n, const Rational& p, const Rational& q);

/// 1 / (sqrt(2 pi d) (1 - d/n)^d) with d = floor(p (n+1)); bounds max_i P(X = i).
/// Throws DomainError unless 2 <= d < n.
double binom_collision_upper_bound(std::uint64_t n, double p);

struct ProbGtOne {
    double exact = 0.0;  ///< 1 - (1-p)^n - n p (1-p)^(n-1)
    double bound = 0.0;  ///< 1 - e^-c (1 + c e^(c/n)), c = p n
};
ProbGtOne prob_gt_one_and_bound(std::uint64_t n, double p);

// ---------------------------------------------------------------------------
// Simple ±1 random walks

inline constexpr std::uint64_t kRandomWalkCapacity = 4000;

/// Counts of |position| after k fair steps; entry m counts the 2^k step
/// sequences ending at distance m from the origin.
std::vector<BigInt> folded_walk_counts(std::uint64_t k);

struct RandomWalkComparison {
    Rational less;     ///< P(|A| < |B|)
    Rational equal;    ///< P(|A| = |B|)
    Rational greater;  ///< P(|A| > |B|)
};

/// A, B independent walks of a and b steps. Throws CapacityError when a + b > 4000.
RandomWalkComparison rw_abs_compare(std::uint64_t a, std::uint64_t b);

/// 1/2 - P(Z = (a+b)/2) + P(X = a/2) P(Y = b/2) / 2 with X ~ Bin(a,1/2),
/// Y ~ Bin(b,1/2), Z ~ Bin(a+b,1/2); terms at non-integer points vanish.
/// Requires a <= b.
Rational rw_lower_bound(std::uint64_t a, std::uint64_t b);

// ---------------------------------------------------------------------------
// Disk-lens geometry on the unit torus

struct RegionMeasures {
    double mu_common = 0.0;
    double mu_u_exclusive = 0.0;
    double mu_v_exclusive = 0.0;
    double mu_outside = 0.0;
    double tau = 0.0;
};

/// Region measures for an edge at normalized distance tau = dist/r, tau in [0, 2].
RegionMeasures region_measures(std::uint64_t n, double avg_degree, double tau);

/// tau^2: fraction of RGG edges with normalized length at most tau, tau in [0, 1].
double edge_within_tau_fraction(double tau);

// ---------------------------------------------------------------------------
// Assembled bounds

struct Theorem1Bound {
    double value = 0.0;
    /// The (1 - o(1)) factor has no finite-n form and is not applied.
    bool asymptotic_factor_dropped = true;
    double degree_factor = 0.0;     ///< (1/2 - 1/sqrt(2 pi floor(d/2)))^2
    double neighborhood_factor = 0.0;  ///< 1 - e^(-d/2) (1 + d/2)
};

/// Lower bound on the expected monochrome fraction after one step on a RGG.
/// Requires avg_degree >= 2.
Theorem1Bound theorem1_bound(double avg_degree);

struct ErCommonEmpty {
    double exact = 0.0;       ///< (1 - p^2)^(n-2)
    double complement = 0.0;  ///< 1 - exact
    double bound = 0.0;       ///< n p^2
};
ErCommonEmpty er_common_empty_probability(std::uint64_t n, double p);

} // namespace fsp
