#pragma once

#include "binomgap/primes.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace binomgap {

// (a, b, n) with k = a + b - n; the question is whether a! b! | n! k!.
struct Triple {
    Natural a = 0;
    Natural b = 0;
    Natural n = 0;

    std::int64_t k() const
    {
        return static_cast<std::int64_t>(a) + static_cast<std::int64_t>(b) - static_cast<std::int64_t>(n);
    }
};

// (a, b, n) = (m + k, m, 2m).
Triple family_triple(Natural m, Natural k);

enum class OracleMode { both, per_prime };

// Factorials above this size are not materialised as big integers.
inline constexpr Natural kBigIntegerOracleLimit = 100000;

struct FactorialVerdict {
    bool divides = false;
    bool per_prime_divides = false;
    std::optional<bool> big_integer_divides;  // present when the exact check ran
    bool oracle_range_exceeded = false;       // big-integer mode requested but skipped
    std::optional<Natural> failing_prime;     // smallest prime with too little room
};

// Decides a! b! | n! k! by per-prime Legendre comparison and, when in range
// and requested, by exact big-integer division.  Disagreement between the
// two routes throws std::logic_error.
FactorialVerdict factorial_divides(const Triple& t, OracleMode mode = OracleMode::both);

// Distinct primes dividing some m+i, 1 <= i <= k, ascending.  Only these can
// give C(m+k, k) or the block product a positive valuation.
std::vector<Natural> block_primes(Natural m, Natural k);

// C(m+k, k) | C(2m, m).
bool binom_divides(Natural m, Natural k);

// Primes p with valuation_gap(m, k, p) < 0, ascending.
std::vector<Natural> failing_primes(Natural m, Natural k);

// V_p(m, k) <= kappa_p(m).
bool sufficient_per_prime(Natural m, Natural k, Natural p);

// sufficient_per_prime restricted to p > 2k, where it always holds.
bool large_prime_check(Natural m, Natural k, Natural p);

// kappa_p(m) - nu_p(C(m+k, k)); may be negative.
std::int64_t valuation_gap(Natural m, Natural k, Natural p);

struct GapReport {
    Natural p = 0;
    std::int64_t gap = 0;
    double threshold = 0.0;  // c2 * log m / log p when p <= bound, else 0
    bool meets = false;      // gap >= threshold
};

GapReport gap_report(Natural m, Natural k, Natural p, double c2, Natural prime_bound);

}  // namespace binomgap
