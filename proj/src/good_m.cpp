#include "binomgap/good_m.hpp"

#include "binomgap/parallel.hpp"
#include "binomgap/valuation.hpp"

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>

namespace binomgap {

Ratio theta(Natural p)
{
    if (p == 2)
        return Ratio(1, 2);
    return Ratio(static_cast<std::int64_t>(p) - 1, 2 * static_cast<std::int64_t>(p));
}

unsigned digit_depth(Natural M, Natural p, const Ratio& eta)
{
    // p^L <= M^(1-eta)  <=>  p^(L*den) <= M^(den-num), compared exactly.
    const auto den = static_cast<unsigned long>(eta.den());
    const auto num = static_cast<unsigned long>(eta.num());
    mpz_class limit;
    mpz_class base;
    mpz_set_ui(base.get_mpz_t(), static_cast<unsigned long>(M));
    mpz_pow_ui(limit.get_mpz_t(), base.get_mpz_t(), den - num);

    mpz_class step;
    mpz_class prime;
    mpz_set_ui(prime.get_mpz_t(), static_cast<unsigned long>(p));
    mpz_pow_ui(step.get_mpz_t(), prime.get_mpz_t(), den);

    unsigned L = 0;
    mpz_class power = step;
    while (power <= limit) {
        ++L;
        power *= step;
    }
    return L;
}

unsigned t_value(Natural M, const TRule& rule)
{
    const double loglog = std::log(std::log(static_cast<double>(M)));
    switch (rule.policy) {
    case TPolicy::paper_10loglog:
        return static_cast<unsigned>(std::ceil(10.0 * loglog));
    case TPolicy::appendix_loglog:
        return static_cast<unsigned>(std::ceil(loglog));
    case TPolicy::fixed:
        return rule.fixed_value;
    }
    throw std::invalid_argument("unknown t policy");
}

DerivedParams derive_params(const SearchParams& sp)
{
    if (sp.M < 3)
        throw std::invalid_argument("derive_params: M must be >= 3 so that log log M > 0");
    if (!(sp.c > 0.0))
        throw std::invalid_argument("derive_params: c must be positive");
    if (sp.eta <= Ratio(0) || sp.eta >= Ratio(1))
        throw std::invalid_argument("derive_params: eta must lie in (0, 1)");

    DerivedParams dp;
    dp.M = sp.M;
    const double scaled = sp.c * std::log(static_cast<double>(sp.M));
    dp.k = static_cast<Natural>(std::floor(scaled));
    if (dp.k == 0)
        throw std::invalid_argument("derive_params: k = floor(c log M) = 0 for M=" + std::to_string(sp.M) +
                                    ", c=" + std::to_string(sp.c) + "; increase M or c");
    dp.t = t_value(sp.M, sp.t_rule);

    dp.threshold_holds = true;
    for (Natural p : primes_up_to(2 * dp.k)) {
        PrimeRow row;
        row.p = p;
        row.L = digit_depth(sp.M, p, sp.eta);
        row.theta = theta(p);
        row.mu = Ratio(row.L) * row.theta;
        for (Natural power = p; power <= dp.k; power *= p)
            ++row.J;
        if (row.mu < Ratio(2 * (static_cast<std::int64_t>(row.J) + dp.t + 3)))
            dp.threshold_holds = false;
        dp.rows.push_back(row);
    }
    return dp;
}

bool is_bad_carry(Natural m, const PrimeRow& row)
{
    // X < mu / 2 in exact arithmetic.
    const auto x = static_cast<std::int64_t>(big_digit_count(m, row.p, row.L));
    return Ratio(2 * x) < row.mu;
}

bool is_bad_spike(Natural m, Natural k, const PrimeRow& row, unsigned t)
{
    return v_max(m, k, row.p) >= row.J + t;
}

namespace {

bool is_good_direct(Natural m, const DerivedParams& dp)
{
    for (const auto& row : dp.rows)
        if (v_max(m, dp.k, row.p) > kappa(m, row.p))
            return false;
    return true;
}

bool is_good_paper(Natural m, const DerivedParams& dp)
{
    for (const auto& row : dp.rows)
        if (is_bad_carry(m, row) || is_bad_spike(m, dp.k, row, dp.t))
            return false;
    return true;
}

GoodCertificate certify(Natural m, const SearchParams& sp, const DerivedParams& dp)
{
    GoodCertificate cert;
    cert.m = m;
    cert.k = dp.k;
    cert.mode = sp.mode;
    cert.triple = family_triple(m, dp.k);
    for (const auto& row : dp.rows) {
        PrimeWitness w;
        w.p = row.p;
        w.big_digits = big_digit_count(m, row.p, row.L);
        w.v_max = v_max(m, dp.k, row.p);
        w.kappa = kappa(m, row.p);
        w.spike_threshold = row.J + dp.t;
        cert.witnesses.push_back(w);
    }

    const auto n = static_cast<double>(cert.triple.n);
    const double log_n = std::log(n);
    const auto k = static_cast<double>(dp.k);
    cert.k_over_log_n = k / log_n;
    cert.log_window_ok = sp.C1 * log_n < k && k < sp.C2 * log_n;
    const auto a = static_cast<double>(cert.triple.a);
    const auto b = static_cast<double>(cert.triple.b);
    const double lo = sp.epsilon * n;
    const double hi = (1.0 - sp.epsilon) * n;
    cert.band_ok = lo <= a && a <= hi && lo <= b && b <= hi;
    cert.window_ok = cert.log_window_ok && cert.band_ok;

    const auto verdict = factorial_divides(cert.triple, OracleMode::both);
    if (!verdict.divides)
        throw std::logic_error("scan: good m=" + std::to_string(m) +
                               " failed the independent factorial-divisibility check");
    cert.divisibility_verified = true;
    cert.big_integer_checked = verdict.big_integer_divides.has_value();
    return cert;
}

}  // namespace

bool is_good(Natural m, const DerivedParams& dp, GoodMode mode)
{
    return mode == GoodMode::direct ? is_good_direct(m, dp) : is_good_paper(m, dp);
}

ScanResult scan(const SearchParams& sp)
{
    if (!(sp.C1 > 0.0 && sp.C1 < sp.C2))
        throw std::invalid_argument("scan: need 0 < C1 < C2");
    if (!(sp.C1 < sp.c && sp.c < sp.C2))
        throw std::invalid_argument("scan: need C1 < c < C2");
    if (!(sp.epsilon > 0.0 && sp.epsilon < 0.5))
        throw std::invalid_argument("scan: epsilon must lie in (0, 1/2)");

    ScanResult out;
    out.params = derive_params(sp);
    const auto& dp = out.params;
    auto accept = [&](Natural m) {
        if (sp.mode == GoodMode::direct)
            return is_good_direct(m, dp);
        return is_good_paper(m, dp) && is_good_direct(m, dp);
    };
    if (auto m = find_first(sp.M, 2 * sp.M, sp.threads, accept))
        out.certificate = certify(*m, sp, dp);
    return out;
}

double bad_carry_bound(Natural M, const PrimeRow& row)
{
    const double interval = static_cast<double>(M) + 1.0;
    return interval * std::exp(-row.mu.value() / 8.0) +
           2.0 * std::pow(static_cast<double>(row.p), static_cast<double>(row.L));
}

double bad_spike_bound(Natural M, Natural k, const PrimeRow& row, unsigned t)
{
    const double interval = static_cast<double>(M) + 1.0;
    const double modulus = std::pow(static_cast<double>(row.p), static_cast<double>(row.J + t));
    return static_cast<double>(k) * (interval / modulus + 2.0);
}

CensusReport census(const SearchParams& sp)
{
    CensusReport out;
    out.params = derive_params(sp);
    const auto& dp = out.params;
    const std::size_t np = dp.rows.size();

    struct Counts {
        std::vector<Natural> carry;
        std::vector<Natural> spike;
        Natural any = 0;
    };
    auto count_block = [&](Natural a, Natural b) {
        Counts c{std::vector<Natural>(np, 0), std::vector<Natural>(np, 0), 0};
        for (Natural m = a; m <= b; ++m) {
            bool bad = false;
            for (std::size_t i = 0; i < np; ++i) {
                if (is_bad_carry(m, dp.rows[i])) {
                    ++c.carry[i];
                    bad = true;
                }
                if (is_bad_spike(m, dp.k, dp.rows[i], dp.t)) {
                    ++c.spike[i];
                    bad = true;
                }
            }
            c.any += bad ? 1 : 0;
        }
        return c;
    };
    auto merge = [](Counts acc, Counts part) {
        for (std::size_t i = 0; i < acc.carry.size(); ++i) {
            acc.carry[i] += part.carry[i];
            acc.spike[i] += part.spike[i];
        }
        acc.any += part.any;
        return acc;
    };
    Counts total = reduce_range(sp.M, 2 * sp.M, sp.threads,
                                Counts{std::vector<Natural>(np, 0), std::vector<Natural>(np, 0), 0},
                                count_block, merge);

    out.interval_size = sp.M + 1;
    out.bad_union_count = total.any;
    for (std::size_t i = 0; i < np; ++i) {
        const auto& row = dp.rows[i];
        CensusRow r;
        r.p = row.p;
        r.L = row.L;
        r.mu = row.mu;
        r.J = row.J;
        r.t = dp.t;
        r.bad_carry_count = total.carry[i];
        r.bad_carry_bound = bad_carry_bound(sp.M, row);
        r.bad_spike_count = total.spike[i];
        r.bad_spike_bound = bad_spike_bound(sp.M, dp.k, row, dp.t);
        r.within_bounds = static_cast<double>(r.bad_carry_count) <= r.bad_carry_bound * (1.0 + kBoundSlack) &&
                          static_cast<double>(r.bad_spike_count) <= r.bad_spike_bound * (1.0 + kBoundSlack);
        out.rows.push_back(r);
    }
    return out;
}

}  // namespace binomgap
