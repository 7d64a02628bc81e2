#include "binomgap/divisibility.hpp"

#include "binomgap/oracle.hpp"
#include "binomgap/valuation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace binomgap {

std::vector<Natural> block_primes(Natural m, Natural k)
{
    std::vector<Natural> out;
    for (Natural i = 1; i <= k; ++i) {
        auto ps = prime_divisors(m + i);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Triple family_triple(Natural m, Natural k)
{
    return Triple{m + k, m, 2 * m};
}

FactorialVerdict factorial_divides(const Triple& t, OracleMode mode)
{
    if (t.a + t.b < t.n)
        throw std::invalid_argument("factorial_divides: a + b < n");
    const auto k = static_cast<Natural>(t.k());

    FactorialVerdict out;
    out.per_prime_divides = true;
    for (Natural p : primes_up_to(std::max({t.a, t.b, t.n}))) {
        Natural lhs = nu_factorial(t.a, p) + nu_factorial(t.b, p);
        Natural rhs = nu_factorial(t.n, p) + nu_factorial(k, p);
        if (lhs > rhs) {
            out.per_prime_divides = false;
            out.failing_prime = p;
            break;
        }
    }

    if (mode == OracleMode::both) {
        if (std::max({t.a, t.b, t.n, k}) > kBigIntegerOracleLimit) {
            out.oracle_range_exceeded = true;
        } else {
            mpz_class num = oracle::factorial(t.n) * oracle::factorial(k);
            mpz_class den = oracle::factorial(t.a) * oracle::factorial(t.b);
            out.big_integer_divides = mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) != 0;
            if (*out.big_integer_divides != out.per_prime_divides)
                throw std::logic_error("factorial_divides: per-prime and big-integer routes disagree at (" +
                                       std::to_string(t.a) + ", " + std::to_string(t.b) + ", " +
                                       std::to_string(t.n) + ")");
        }
    }
    out.divides = out.per_prime_divides;
    return out;
}

std::vector<Natural> failing_primes(Natural m, Natural k)
{
    std::vector<Natural> out;
    for (Natural p : block_primes(m, k))
        if (valuation_gap(m, k, p) < 0)
            out.push_back(p);
    return out;
}

bool binom_divides(Natural m, Natural k)
{
    for (Natural p : block_primes(m, k))
        if (valuation_gap(m, k, p) < 0)
            return false;
    return true;
}

bool sufficient_per_prime(Natural m, Natural k, Natural p)
{
    return v_max(m, k, p) <= kappa(m, p);
}

bool large_prime_check(Natural m, Natural k, Natural p)
{
    if (p <= 2 * k)
        throw std::invalid_argument("large_prime_check: requires p > 2k");
    return sufficient_per_prime(m, k, p);
}

std::int64_t valuation_gap(Natural m, Natural k, Natural p)
{
    return static_cast<std::int64_t>(kappa(m, p)) - static_cast<std::int64_t>(nu_binomial(m + k, k, p));
}

GapReport gap_report(Natural m, Natural k, Natural p, double c2, Natural prime_bound)
{
    GapReport out;
    out.p = p;
    out.gap = valuation_gap(m, k, p);
    if (p <= prime_bound && m > 1)
        out.threshold = c2 * std::log(static_cast<double>(m)) / std::log(static_cast<double>(p));
    out.meets = static_cast<double>(out.gap) >= out.threshold;
    return out;
}

}  // namespace binomgap
