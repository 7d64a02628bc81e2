#pragma once

// Base-p digit, valuation and carry primitives on machine-width naturals.
//
// Every routine here is a pure function.  Zero valuations are errors rather
// than an "infinite" sentinel, and arithmetic that could leave 64 bits throws
// std::overflow_error.

#include "binomgap/primes.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace binomgap {

// Canonical little-endian base-p expansion: digit j is the coefficient of
// p^j, and there is no trailing zero (the value 0 has no digits).
class DigitExpansion {
public:
    DigitExpansion(Natural base, std::vector<Natural> digits);

    Natural base() const { return base_; }
    std::span<const Natural> digits() const { return digits_; }
    std::size_t size() const { return digits_.size(); }

    // Positions past the expansion read as 0.
    Natural digit(std::size_t j) const { return j < digits_.size() ? digits_[j] : 0; }

    // Reconstructs the integer; throws std::overflow_error past 64 bits.
    Natural value() const;

private:
    Natural base_;
    std::vector<Natural> digits_;
};

struct ValuationProfile {
    Natural p = 0;
    unsigned kappa = 0;           // carries in m + m
    unsigned v_max = 0;           // max nu_p(m+i), 1 <= i <= k
    Natural w_sum = 0;            // sum nu_p(m+i), 1 <= i <= k
    Natural nu_k_factorial = 0;   // nu_p(k!)
    Natural nu_binom_mk = 0;      // nu_p(C(m+k, k))
};

// Rejects a non-prime base with std::invalid_argument.
DigitExpansion digits(Natural n, Natural p);

unsigned nu_int(Natural n, Natural p);
Natural nu_factorial(Natural n, Natural p);
Natural nu_binomial(Natural n, Natural r, Natural p);

// Number of carries when adding m + m in base p.
unsigned kappa(Natural m, Natural p);

unsigned v_max(Natural m, Natural k, Natural p);
Natural w_sum(Natural m, Natural k, Natural p);

// Number of the first L base-p digits of m that are >= ceil(p/2).
unsigned big_digit_count(Natural m, Natural p, unsigned L);

// Carries produced at positions 0..L-1 when doubling m mod p^L.
unsigned truncated_carry_count(Natural m, Natural p, unsigned L);

Natural digit_sum(Natural m, Natural p);

ValuationProfile valuation_profile(Natural m, Natural k, Natural p);

// p^e, throwing std::overflow_error when it does not fit.
Natural checked_pow(Natural p, unsigned e);

}  // namespace binomgap
