#pragma once

// Finite-scale density experiments: how often block-product and binomial
// divisibility survive as k grows with m, the p = 2 sharpness census, and
// small-carry obstruction primes.

#include "binomgap/primes.hpp"
#include "binomgap/ratio.hpp"

#include <string>
#include <vector>

namespace binomgap {

enum class DensityKind { interval_product, binomial };
enum class KRule { c_log_m, exp_c_sqrt_log_m };

std::string to_string(DensityKind kind);
std::string to_string(KRule rule);

// max(1, floor(c log m)) or floor(exp(c sqrt(log m))).
Natural block_length(Natural m, double c, KRule rule);

// (m+1)(m+2)...(m+k) | C(2m, m).
bool interval_product_divides(Natural m, Natural k);

// C(m+j, j) | C(2m, m) for every 1 <= j <= k.
bool binom_divides_all_up_to(Natural m, Natural k);

struct DensityPoint {
    Natural N = 0;
    double c = 0.0;
    DensityKind kind = DensityKind::interval_product;
    KRule k_rule = KRule::c_log_m;
    Natural total = 0;
    Natural hits = 0;
    double fraction = 0.0;
};

// One point per c over m in [2, N].  The binomial kind asks for every
// j <= k, so a hit at some c is also a hit at every smaller c.
std::vector<DensityPoint> density_sweep(Natural N, const std::vector<double>& c_list, DensityKind kind,
                                        KRule k_rule, unsigned threads = 1);

struct SharpnessCount {
    Natural N = 0;
    double c = 0.0;
    Natural blocked = 0;
    Natural total = 0;
};

// nu_2(k!) > s_2(m) with k = max(1, floor(c log m)).
bool sharpness_blocked(Natural m, double c);

// Counts blocked m in [2, N].
SharpnessCount sharpness_census(Natural N, double c, unsigned threads = 1);

struct ObstructionWitness {
    Natural m = 0;
    Natural k = 0;
    Natural p = 0;
    unsigned kappa_p = 0;  // 0 by construction
    Natural nu_binom = 0;  // nu_p(C(m+k, k)) >= 1, re-verified
};

// Primes p in (K, floor((1+delta) K)] with kappa_p(m) = 0 and the lowest
// base-p digit of m in [p - K, (p-1)/2].
std::vector<ObstructionWitness> obstruction_witnesses(Natural m, Natural K, const Ratio& delta);

// Same with K = floor(exp(c sqrt(log m))); requires m >= 16.
std::vector<ObstructionWitness> obstruction_scan(Natural m, double c, const Ratio& delta);

enum class PrimeBoundRule { two_k, exp_sqrt_log };

struct GapRule {
    PrimeBoundRule rule = PrimeBoundRule::two_k;
    double c_p = 0.0;  // P(m) = floor(exp(c_p sqrt(log m))) under exp_sqrt_log
};

struct GapSummary {
    Natural N = 0;
    double c = 0.0;
    double c2 = 0.0;
    Natural total = 0;
    Natural hits = 0;
    double fraction = 0.0;
};

// Fraction of m in [2, N] such that for every 1 <= k <= floor(exp(c sqrt(log m)))
// and every prime p, valuation_gap(m, k, p) >= c2 log m / log p * [p <= bound].
GapSummary gap_statistics(Natural N, double c, double c2, const GapRule& rule, unsigned threads = 1);

}  // namespace binomgap
