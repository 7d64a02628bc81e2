#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binomgap/carry_chain.hpp"
#include "binomgap/density.hpp"
#include "binomgap/divisibility.hpp"
#include "binomgap/oracle.hpp"
#include "binomgap/valuation.hpp"

#include <stdexcept>

using namespace binomgap;

TEST_CASE("interval_product_divides")
{
    CHECK(interval_product_divides(4, 1));
    CHECK_FALSE(interval_product_divides(7, 2));
    CHECK_THROWS_AS(interval_product_divides(7, 0), std::invalid_argument);

    for (Natural m = 0; m <= 2000; ++m) {
        const auto central = oracle::binomial(2 * m, m);
        for (Natural k = 1; k <= 12; ++k) {
            const auto block = oracle::block_product(m, k);
            const bool exact = mpz_divisible_p(central.get_mpz_t(), block.get_mpz_t()) != 0;
            const bool fast = interval_product_divides(m, k);
            REQUIRE(fast == exact);
            if (fast)
                REQUIRE(binom_divides(m, k));
        }
    }
}

TEST_CASE("binom_divides_all_up_to is the conjunction over j <= k")
{
    for (Natural m = 0; m <= 1500; ++m)
        for (Natural k = 0; k <= 15; ++k) {
            bool all = true;
            for (Natural j = 1; j <= k; ++j)
                all = all && binom_divides(m, j);
            REQUIRE(binom_divides_all_up_to(m, k) == all);
        }
}

TEST_CASE("block_length rules")
{
    CHECK(block_length(2, 0.1, KRule::c_log_m) == 1);
    CHECK(block_length(100000, 0.9, KRule::c_log_m) == 10);
    CHECK(block_length(10, 1.0, KRule::exp_c_sqrt_log_m) == 4);
}

TEST_CASE("density_sweep: ordering and bookkeeping")
{
    const std::vector<double> cs{0.2, 0.4, 0.6, 0.8, 1.0, 1.5};
    for (auto kind : {DensityKind::interval_product, DensityKind::binomial})
        for (auto rule : {KRule::c_log_m, KRule::exp_c_sqrt_log_m}) {
            const auto pts = density_sweep(5000, cs, kind, rule, 4);
            REQUIRE(pts.size() == cs.size());
            for (std::size_t i = 0; i < pts.size(); ++i) {
                CHECK(pts[i].total == 4999);
                CHECK(pts[i].hits <= pts[i].total);
                CHECK(pts[i].fraction >= 0.0);
                CHECK(pts[i].fraction <= 1.0);
                if (i > 0)
                    CHECK(pts[i].fraction <= pts[i - 1].fraction);
            }
            const auto serial = density_sweep(5000, cs, kind, rule, 1);
            for (std::size_t i = 0; i < pts.size(); ++i)
                CHECK(serial[i].hits == pts[i].hits);
        }

    const auto pts = density_sweep(10000, {0.4, 0.9}, DensityKind::interval_product, KRule::c_log_m);
    CHECK(pts[0].fraction > pts[1].fraction);
    CHECK_THROWS_AS(density_sweep(1, {0.5}, DensityKind::binomial, KRule::c_log_m), std::invalid_argument);
    CHECK_THROWS_AS(density_sweep(100, {0.0}, DensityKind::binomial, KRule::c_log_m), std::invalid_argument);
}

TEST_CASE("sharpness: nu_2(k!) = k - s_2(k)")
{
    for (Natural k = 0; k <= 10000; ++k)
        REQUIRE(nu_factorial(k, 2) == k - digit_sum(k, 2));
}

TEST_CASE("sharpness: every blocked m fails the block-product divisibility")
{
    Natural blocked = 0;
    for (Natural m = 2; m <= 30000; ++m)
        if (sharpness_blocked(m, 0.9)) {
            ++blocked;
            const Natural k = block_length(m, 0.9, KRule::c_log_m);
            REQUIRE(nu_factorial(k, 2) > kappa(m, 2));
            REQUIRE_FALSE(interval_product_divides(m, k));
        }
    CHECK(blocked > 0);

    const auto census = sharpness_census(30000, 0.9, 3);
    CHECK(census.blocked == blocked);
    CHECK(census.total == 29999);
}

TEST_CASE("obstruction witnesses")
{
    const auto ws = obstruction_witnesses(10, 4, Ratio(4, 5));
    REQUIRE(ws.size() == 1);
    CHECK(ws[0].p == 7);
    CHECK(ws[0].kappa_p == 0);
    CHECK(ws[0].nu_binom == 1);
    CHECK(kappa(10, 7) == 0);
    CHECK(oracle::binomial(14, 4) == 1001);

    // All digits p - 1: never a witness for that p.
    for (Natural p : {5, 7, 11, 13})
        for (unsigned j = 1; j <= 4; ++j) {
            const Natural m = checked_pow(p, j) - 1;
            for (Natural K = p / 2 + 1; K < p; ++K)
                for (const auto& w : obstruction_witnesses(m, K, Ratio(9, 10)))
                    CHECK(w.p != p);
        }

    Natural found = 0;
    for (Natural m = 16; m <= 20000; ++m)
        for (const auto& w : obstruction_scan(m, 1.2, Ratio(1, 2))) {
            ++found;
            REQUIRE(w.nu_binom >= 1);
            REQUIRE(kappa(m, w.p) == 0);
            REQUIRE(valuation_gap(m, w.k, w.p) < 0);
            REQUIRE_FALSE(binom_divides(m, w.k));
        }
    CHECK(found > 0);
    CHECK_THROWS_AS(obstruction_scan(10, 1.0, Ratio(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(obstruction_witnesses(100, 5, Ratio(1)), std::invalid_argument);
}

TEST_CASE("gap statistics")
{
    const GapRule two_k{PrimeBoundRule::two_k, 0.0};
    const auto zero = gap_statistics(3000, 0.5, 0.0, two_k, 2);
    Natural expected = 0;
    for (Natural m = 2; m <= 3000; ++m)
        expected += binom_divides_all_up_to(m, block_length(m, 0.5, KRule::exp_c_sqrt_log_m)) ? 1 : 0;
    CHECK(zero.hits == expected);

    for (const auto& rule : {two_k, GapRule{PrimeBoundRule::exp_sqrt_log, 0.8}}) {
        double previous = 1.0;
        for (double c2 : {0.0, 0.05, 0.1, 0.2, 0.4}) {
            const auto g = gap_statistics(3000, 0.5, c2, rule, 4);
            CHECK(g.fraction <= previous);
            previous = g.fraction;
        }
    }

    const auto small = gap_statistics(10000, 0.3, 0.05, two_k, 4);
    CHECK(small.hits > 0);
    CHECK(small.total == 9999);
}
