#pragma once

// The carry chain of doubling a uniform residue m mod p^L.  Carries C_i form
// a two-state Markov chain; S_L counts them.  This header provides the
// transition and tilted matrices, the Perron eigenvalue/eigenvector,
// large-deviation rate quantities and exact lower-tail probabilities.

#include "binomgap/primes.hpp"
#include "binomgap/ratio.hpp"

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace binomgap {

// entries[u][v] = P(next carry = v | current carry = u).
struct TransitionMatrix {
    std::array<std::array<double, 2>, 2> entries{};

    double operator()(int u, int v) const { return entries[u][v]; }
};

// Closed form: 1/2 +- 1/(2p) for odd p, all entries 1/2 for p = 2.
TransitionMatrix transition_matrix(Natural p);

// counts[u][v] = number of digits a in [0, p) with [2a + u >= p] == v.
std::array<std::array<Natural, 2>, 2> carry_digit_counts(Natural p);

struct PerronPair {
    double rho = 0.0;
    std::array<double, 2> vector{};  // right eigenvector, min entry = 1
    double ratio = 0.0;              // max entry of vector, R
    double constant() const { return ratio * ratio; }  // C_p(lambda) = R^2
};

// Perron eigenvalue and min-normalised eigenvector of T_p(lambda) with
// entries P(u, v) e^(lambda v), by the 2x2 quadratic formula.
PerronPair perron(Natural p, double lambda);
double tilted_eigenvalue(Natural p, double lambda);

// (1 + e^lambda) / 2, the p -> infinity limit of the Perron eigenvalue.
double limit_eigenvalue(double lambda);

// E[e^(lambda S_L)] = e0^T T_p(lambda)^L 1.
double moment_generating(Natural p, unsigned L, double lambda);

// Both throw std::invalid_argument unless 0 < delta < 1.
double rate_function(double delta);
double optimal_tilt(double delta);

// P(S_L = j), j = 0..L, for m uniform on [0, p^L).
std::vector<double> carry_count_distribution(Natural p, unsigned L);

// Exact counts #{m < p^L : S_L(m) = j}; sums to p^L.
std::vector<mpz_class> carry_count_histogram(Natural p, unsigned L);

// P(S_L <= s L) by dynamic programming; the comparison j <= s L is exact.
double exact_tail(Natural p, unsigned L, const Ratio& s);
mpq_class exact_tail_rational(Natural p, unsigned L, const Ratio& s);

// E[S_L] / L for the chain started at carry 0 (1/2 minus a transient).
double expected_carry_fraction(Natural p, unsigned L);

struct CarryChainSpec {
    Natural p = 2;
    unsigned L = 0;
    Ratio s{1, 4};
    double lambda = 0.0;

    // s = (1 - delta) / 2 and lambda = log((1 - delta) / (1 + delta)).
    static CarryChainSpec from_delta(Natural p, unsigned L, const Ratio& delta);
};

struct TailResult {
    double exact = 0.0;
    double tilted_bound = 0.0;
    std::optional<double> chernoff_bound;  // p = 2 and s = 1/4 only: e^(-mu/8), mu = L/2
    double C_used = 0.0;
    double rho_used = 0.0;
};

// Computes the exact tail and its bounds; throws std::logic_error if the
// exact value exceeds any applicable bound.  Requires lambda <= 0.
TailResult tail_bounds(const CarryChainSpec& spec);

// SplitMix64: 64-bit state, increment 0x9e3779b97f4a7c15, output mixer
// constants 0xbf58476d1ce4e5b9 and 0x94d049bb133111eb.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    // Uniform on [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

struct ChainEstimate {
    double mean_fraction = 0.0;  // average of S_L / L over trials
    double std_error = 0.0;      // sample standard deviation / sqrt(trials)
};

// Monte Carlo over independent uniform digits; L = 0 returns zeros.
ChainEstimate empirical_chain_check(Natural p, unsigned L, std::uint64_t trials, std::uint64_t seed);

}  // namespace binomgap
