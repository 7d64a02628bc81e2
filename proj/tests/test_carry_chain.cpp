#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binomgap/carry_chain.hpp"
#include "binomgap/valuation.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace binomgap;

namespace {

// P(Bin(L, 1/2) <= s L) from exact binomial coefficients.
double binomial_half_tail(unsigned L, const Ratio& s)
{
    mpz_class hits = 0;
    for (unsigned j = 0; Ratio(static_cast<std::int64_t>(j)) <= s * Ratio(L) && j <= L; ++j) {
        mpz_class term;
        mpz_bin_uiui(term.get_mpz_t(), L, j);
        hits += term;
    }
    mpz_class denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), 2, L);
    return mpq_class(hits, denom).get_d();
}

}  // namespace

TEST_CASE("transition matrix")
{
    const auto two = transition_matrix(2);
    for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v)
            CHECK(two(u, v) == 0.5);
    const auto three = transition_matrix(3);
    CHECK(three(0, 0) == doctest::Approx(2.0 / 3.0));
    CHECK(three(0, 1) == doctest::Approx(1.0 / 3.0));
    CHECK(three(1, 0) == doctest::Approx(1.0 / 3.0));
    CHECK(three(1, 1) == doctest::Approx(2.0 / 3.0));

    for (Natural p : primes_up_to(10000)) {
        const auto t = transition_matrix(p);
        const auto counts = carry_digit_counts(p);
        for (int u = 0; u < 2; ++u) {
            REQUIRE(t(u, 0) + t(u, 1) == doctest::Approx(1.0).epsilon(1e-15));
            REQUIRE(counts[u][0] + counts[u][1] == p);
            for (int v = 0; v < 2; ++v) {
                REQUIRE(t(u, v) >= 0.0);
                REQUIRE(t(u, v) == doctest::Approx(static_cast<double>(counts[u][v]) / p).epsilon(1e-14));
            }
        }
    }
}

TEST_CASE("tilted eigenvalue")
{
    for (Natural p : {2, 3, 5, 101, 7919})
        CHECK(tilted_eigenvalue(p, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    for (double lambda : {-3.0, -1.0, -0.25, 0.5, 2.0})
        CHECK(tilted_eigenvalue(2, lambda) == doctest::Approx((1.0 + std::exp(lambda)) / 2.0).epsilon(1e-14));

    // Eigenpair equation and min-normalisation.
    for (Natural p : {3, 13, 97})
        for (double lambda : {-2.0, -0.7, 0.3}) {
            const auto pr = perron(p, lambda);
            const auto P = transition_matrix(p);
            const double w = std::exp(lambda);
            for (int u = 0; u < 2; ++u) {
                const double tv = P(u, 0) * pr.vector[0] + P(u, 1) * w * pr.vector[1];
                CHECK(tv == doctest::Approx(pr.rho * pr.vector[u]).epsilon(1e-13));
            }
            CHECK(std::min(pr.vector[0], pr.vector[1]) == 1.0);
            CHECK(pr.ratio >= 1.0);
        }

    // Approach to the p -> infinity limit is monotone in p.
    const auto primes = primes_up_to(2000);
    for (double lambda : {-3.0, -1.5, -0.5, -0.1, 0.1, 0.5, 1.5}) {
        double previous = INFINITY;
        for (std::size_t i = 1; i < primes.size(); ++i) {
            const double gap = std::abs(tilted_eigenvalue(primes[i], lambda) - limit_eigenvalue(lambda));
            REQUIRE(gap <= previous);
            previous = gap;
        }
        CHECK(previous < 1e-3);
    }
}

TEST_CASE("rate function and optimal tilt")
{
    CHECK(rate_function(1e-6) == doctest::Approx(0.0).epsilon(1e-11));
    CHECK(rate_function(0.5) == doctest::Approx(0.130812).epsilon(1e-6));
    CHECK(std::abs(rate_function(1.0 - 1e-8) - std::log(2.0)) < 1e-6);
    CHECK_THROWS_AS(rate_function(0.0), std::invalid_argument);
    CHECK_THROWS_AS(rate_function(1.0), std::invalid_argument);
    CHECK_THROWS_AS(optimal_tilt(-0.2), std::invalid_argument);

    CHECK(optimal_tilt(0.5) == doctest::Approx(std::log(1.0 / 3.0)).epsilon(1e-15));
    const double lambda_half = optimal_tilt(0.5);
    CHECK(lambda_half * 0.25 - std::log(limit_eigenvalue(lambda_half)) ==
          doctest::Approx(rate_function(0.5)).epsilon(1e-14));
    for (double delta : {0.1, 0.3, 0.5, 0.9}) {
        const double lambda = optimal_tilt(delta);
        const double s = (1.0 - delta) / 2.0;
        CHECK(std::abs(lambda * s - std::log(limit_eigenvalue(lambda)) - rate_function(delta)) < 1e-12);
    }
    for (int j = 1; j < 1000; ++j)
        REQUIRE(optimal_tilt(j / 1000.0) < 0.0);
}

TEST_CASE("exact tail: small cases")
{
    CHECK(exact_tail(2, 4, Ratio(1, 4)) == doctest::Approx(5.0 / 16.0).epsilon(1e-15));
    CHECK(exact_tail_rational(2, 4, Ratio(1, 4)) == mpq_class(5, 16));
    for (Natural p : {2, 3, 11})
        CHECK(exact_tail(p, 0, Ratio(1, 3)) == 1.0);
    CHECK(exact_tail_rational(3, 2, Ratio(1, 4)) == mpq_class(4, 9));
    CHECK(exact_tail(3, 2, Ratio(1, 4)) == doctest::Approx(4.0 / 9.0).epsilon(1e-15));
    CHECK(exact_tail(5, 10, Ratio(1)) == doctest::Approx(1.0));

    // Direct enumeration of the 9 residues: only digits {0,1} avoid a carry.
    int no_carry = 0;
    for (Natural r = 0; r < 9; ++r)
        no_carry += truncated_carry_count(r, 3, 2) == 0 ? 1 : 0;
    CHECK(no_carry == 4);
}

TEST_CASE("exact tail for p = 2 is the binomial tail")
{
    for (unsigned L = 1; L <= 1000; ++L) {
        const double expected = binomial_half_tail(L, Ratio(1, 4));
        REQUIRE(exact_tail(2, L, Ratio(1, 4)) == doctest::Approx(expected).epsilon(1e-11));
    }
    for (unsigned L : {7u, 33u, 64u})
        for (auto s : {Ratio(1, 3), Ratio(2, 5)})
            CHECK(exact_tail(2, L, s) == doctest::Approx(binomial_half_tail(L, s)).epsilon(1e-12));
}

TEST_CASE("floating and rational DPs agree")
{
    for (Natural p : {3, 5, 13})
        for (unsigned L : {1u, 5u, 17u, 60u})
            for (auto s : {Ratio(1, 4), Ratio(7, 20), Ratio(1, 2)})
                CHECK(exact_tail(p, L, s) == doctest::Approx(exact_tail_rational(p, L, s).get_d()).epsilon(1e-12));
}

TEST_CASE("moment generating function matches residue enumeration")
{
    const std::vector<double> grid{-2.0, -1.0, -0.3, 0.0, 0.4, 1.0};
    for (Natural p : {2, 3, 5, 7})
        for (unsigned L = 1; L <= 8; ++L) {
            const Natural Q = checked_pow(p, L);
            std::vector<Natural> hist(L + 1, 0);
            for (Natural r = 0; r < Q; ++r)
                ++hist[truncated_carry_count(r, p, L)];
            for (double lambda : grid) {
                double mgf = 0.0;
                for (unsigned j = 0; j <= L; ++j)
                    mgf += static_cast<double>(hist[j]) * std::exp(lambda * j);
                mgf /= static_cast<double>(Q);
                REQUIRE(std::abs(moment_generating(p, L, lambda) - mgf) <= 1e-10 * std::max(1.0, mgf));
            }
            const auto exact = carry_count_histogram(p, L);
            for (unsigned j = 0; j <= L; ++j)
                REQUIRE(exact[j] == static_cast<unsigned long>(hist[j]));
        }
}

TEST_CASE("log Perron eigenvalue is convex with slope 1/2 at 0")
{
    for (Natural p : {2, 3, 5, 13, 101}) {
        auto Lambda = [p](double x) { return std::log(tilted_eigenvalue(p, x)); };
        CHECK(std::abs(Lambda(0.0)) < 1e-15);
        const double h = 1e-5;
        CHECK(std::abs((Lambda(h) - Lambda(-h)) / (2 * h) - 0.5) < 1e-6);
        const double step = 0.05;
        for (double x = -5.0; x <= 5.0; x += step) {
            const double second = (Lambda(x + step) - 2 * Lambda(x) + Lambda(x - step)) / (step * step);
            REQUIRE(second >= -1e-9);
        }
    }
}

TEST_CASE("tail_bounds")
{
    CarryChainSpec spec;
    spec.p = 2;
    spec.L = 100;
    spec.s = Ratio(1, 4);
    spec.lambda = std::log(1.0 / 3.0);
    const auto r = tail_bounds(spec);
    REQUIRE(r.chernoff_bound.has_value());
    CHECK(*r.chernoff_bound == doctest::Approx(std::exp(-50.0 / 8.0)));
    CHECK(r.exact <= *r.chernoff_bound);
    CHECK(r.exact <= r.tilted_bound);
    CHECK(r.exact == doctest::Approx(binomial_half_tail(100, Ratio(1, 4))).epsilon(1e-12));

    // p = 2 has a constant eigenvector, so C = 1.
    for (double lambda : {-3.0, -1.0, -0.1})
        CHECK(perron(2, lambda).constant() == doctest::Approx(1.0).epsilon(1e-12));

    spec.p = 5;
    spec.lambda = 0.0;
    const auto flat = tail_bounds(spec);
    CHECK(flat.tilted_bound >= 1.0);
    CHECK_FALSE(flat.chernoff_bound.has_value());

    const auto from_delta = CarryChainSpec::from_delta(13, 50, Ratio(1, 2));
    CHECK(from_delta.s == Ratio(1, 4));
    CHECK(from_delta.lambda == doctest::Approx(std::log(1.0 / 3.0)));
    spec.lambda = 0.5;
    CHECK_THROWS_AS(tail_bounds(spec), std::invalid_argument);
}

TEST_CASE("Monte Carlo carry fraction")
{
    const auto est = empirical_chain_check(5, 200, 100000, 42);
    const double exact = expected_carry_fraction(5, 200);
    CHECK(std::abs(est.mean_fraction - exact) < 3 * est.std_error);
    // The chain starts at carry 0; its mean trails 1/2 by sum_i (1/p)^i / (2L).
    const double transient = 0.5 - exact;
    CHECK(transient == doctest::Approx(0.25 / (2 * 200.0)).epsilon(1e-9));
    CHECK(std::abs(est.mean_fraction - 0.5) < 3 * est.std_error + transient);

    const auto again = empirical_chain_check(5, 200, 100000, 42);
    CHECK(again.mean_fraction == est.mean_fraction);
    CHECK(empirical_chain_check(5, 0, 10, 1).mean_fraction == 0.0);
    CHECK_THROWS_AS(empirical_chain_check(5, 10, 0, 1), std::invalid_argument);
}

TEST_CASE("truncated carry counts of uniform residues follow the chain")
{
    const Natural p = 5;
    const unsigned L = 20;
    const Natural Q = checked_pow(p, L);
    const std::uint64_t trials = 1000000;
    SplitMix64 rng(99);
    std::vector<double> hist(L + 1, 0.0);
    for (std::uint64_t i = 0; i < trials; ++i)
        hist[truncated_carry_count(rng.below(Q), p, L)] += 1.0;

    const auto dist = carry_count_distribution(p, L);
    double tv = 0.0;
    double bound = 0.0;
    for (unsigned j = 0; j <= L; ++j) {
        tv += 0.5 * std::abs(hist[j] / trials - dist[j]);
        bound += 0.5 * 5.0 * std::sqrt(dist[j] * (1.0 - dist[j]) / trials);
    }
    CHECK(tv < bound);
}

TEST_CASE("SplitMix64 reference values")
{
    // First outputs for seed 0 from the published reference implementation.
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xe220a8397b1dcdafULL);
    CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
    CHECK(rng.next() == 0x06c45d188009454fULL);
}
