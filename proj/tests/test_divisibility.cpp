#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binomgap/carry_chain.hpp"
#include "binomgap/divisibility.hpp"
#include "binomgap/oracle.hpp"
#include "binomgap/valuation.hpp"

#include <cmath>
#include <stdexcept>

using namespace binomgap;

namespace {

bool binom_divides_exact(Natural m, Natural k)
{
    const auto big = oracle::binomial(2 * m, m);
    const auto small = oracle::binomial(m + k, k);
    return mpz_divisible_p(big.get_mpz_t(), small.get_mpz_t()) != 0;
}

}  // namespace

TEST_CASE("family_triple")
{
    const auto t = family_triple(10, 3);
    CHECK(t.a == 13);
    CHECK(t.b == 10);
    CHECK(t.n == 20);
    CHECK(t.k() == 3);
}

TEST_CASE("factorial_divides: examples and both routes")
{
    auto v = factorial_divides(Triple{5, 4, 8});
    CHECK(v.divides);
    REQUIRE(v.big_integer_divides.has_value());
    CHECK(*v.big_integer_divides);
    CHECK((oracle::factorial(8) / (oracle::factorial(5) * oracle::factorial(4))) == 14);

    CHECK(factorial_divides(Triple{37, 0, 37}).divides);

    v = factorial_divides(Triple{9, 7, 14});
    CHECK_FALSE(v.divides);
    REQUIRE(v.failing_prime.has_value());
    CHECK(*v.failing_prime == 3);

    CHECK_THROWS_AS(factorial_divides(Triple{1, 2, 8}), std::invalid_argument);
}

TEST_CASE("factorial_divides: out of oracle range falls back to per-prime")
{
    const auto v = factorial_divides(family_triple(100000, 3), OracleMode::both);
    CHECK(v.oracle_range_exceeded);
    CHECK_FALSE(v.big_integer_divides.has_value());
    const auto w = factorial_divides(Triple{5, 4, 8}, OracleMode::per_prime);
    CHECK_FALSE(w.big_integer_divides.has_value());
    CHECK_FALSE(w.oracle_range_exceeded);
}

TEST_CASE("binom_divides: examples")
{
    CHECK(binom_divides(123, 0));
    CHECK_FALSE(binom_divides(7, 2));
    CHECK(binom_divides(4, 1));
    CHECK(oracle::binomial(9, 2) == 36);
    CHECK(oracle::binomial(14, 7) == 3432);
    CHECK(failing_primes(7, 2) == std::vector<Natural>{3});
}

TEST_CASE("binomial reformulation: factorial and binomial statements agree")
{
    for (Natural m = 0; m <= 300; ++m)
        for (Natural k = 0; k <= 20; ++k) {
            const bool binom = binom_divides(m, k);
            const auto fact = factorial_divides(family_triple(m, k), OracleMode::both);
            REQUIRE(fact.big_integer_divides.has_value());
            REQUIRE(fact.divides == binom);
            REQUIRE(*fact.big_integer_divides == binom);
            REQUIRE(binom_divides_exact(m, k) == binom);
        }
}

TEST_CASE("per-prime gaps decide global divisibility")
{
    for (Natural m = 0; m <= 500; ++m)
        for (Natural k = 0; k <= 12; ++k) {
            bool all_nonnegative = true;
            for (Natural p : primes_up_to(m + k))
                if (valuation_gap(m, k, p) < 0)
                    all_nonnegative = false;
            REQUIRE(binom_divides(m, k) == all_nonnegative);
        }
}

TEST_CASE("sufficient_per_prime")
{
    CHECK(sufficient_per_prime(3, 1, 2));
    for (Natural p : {2, 3, 5, 7})
        CHECK(sufficient_per_prime(0, 1, p));
    CHECK_FALSE(sufficient_per_prime(7, 2, 3));
    CHECK(oracle::nu(oracle::binomial(14, 7), 3) == 1);
}

TEST_CASE("sufficiency implies divisibility (one direction only)")
{
    SplitMix64 rng(3);
    int implied = 0;
    for (int trial = 0; trial < 4000; ++trial) {
        const Natural m = rng.below(2001);
        const Natural k = 1 + rng.below(15);
        bool all = true;
        for (Natural p : primes_up_to(2 * m))
            if (!sufficient_per_prime(m, k, p)) {
                all = false;
                break;
            }
        if (all) {
            ++implied;
            REQUIRE(binom_divides(m, k));
        }
    }
    CHECK(implied > 0);
}

TEST_CASE("large_prime_check")
{
    CHECK(large_prime_check(7, 1, 7));
    CHECK(large_prime_check(48, 1, 7));
    CHECK(kappa(48, 7) >= 2);
    CHECK_THROWS_AS(large_prime_check(7, 3, 5), std::invalid_argument);

    SplitMix64 rng(5);
    const auto primes = primes_up_to(200);
    for (int i = 0; i < 10000; ++i) {
        const Natural m = rng.below(1000000);
        const Natural k = 1 + rng.below(20);
        for (Natural p : primes)
            if (p > 2 * k)
                REQUIRE(large_prime_check(m, k, p));
    }
}

TEST_CASE("valuation_gap")
{
    for (Natural p : {2, 3, 5, 7})
        CHECK(valuation_gap(1234, 0, p) == static_cast<std::int64_t>(kappa(1234, p)));
    CHECK(valuation_gap(7, 2, 3) == -1);
    CHECK(valuation_gap(10, 4, 7) == -1);
    CHECK(oracle::binomial(14, 4) == 1001);
}

TEST_CASE("gap_report threshold")
{
    const auto r = gap_report(1000, 3, 2, 0.5, 6);
    CHECK(r.threshold == doctest::Approx(0.5 * std::log(1000.0) / std::log(2.0)));
    CHECK(r.meets == (static_cast<double>(r.gap) >= r.threshold));
    const auto above = gap_report(1000, 3, 7, 0.5, 6);
    CHECK(above.threshold == 0.0);
}
