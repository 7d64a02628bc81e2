#include "binomgap/density.hpp"

#include "binomgap/divisibility.hpp"
#include "binomgap/parallel.hpp"
#include "binomgap/valuation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace binomgap {

std::string to_string(DensityKind kind)
{
    return kind == DensityKind::interval_product ? "interval-product" : "binomial";
}

std::string to_string(KRule rule)
{
    return rule == KRule::c_log_m ? "c-log-m" : "exp-c-sqrt-log-m";
}

Natural block_length(Natural m, double c, KRule rule)
{
    const double lm = std::log(static_cast<double>(m));
    if (rule == KRule::c_log_m)
        return std::max<Natural>(1, static_cast<Natural>(std::floor(c * lm)));
    return static_cast<Natural>(std::floor(std::exp(c * std::sqrt(lm))));
}

bool interval_product_divides(Natural m, Natural k)
{
    if (k == 0)
        throw std::invalid_argument("interval_product_divides: k must be >= 1");
    for (Natural p : block_primes(m, k))
        if (w_sum(m, k, p) > kappa(m, p))
            return false;
    return true;
}

bool binom_divides_all_up_to(Natural m, Natural k)
{
    for (Natural p : block_primes(m, k)) {
        const auto carries = static_cast<std::int64_t>(kappa(m, p));
        // nu_p(C(m+j, j)) = W_p(m, j) - nu_p(j!), accumulated over j.
        std::int64_t w = 0;
        for (Natural j = 1; j <= k; ++j) {
            w += nu_int(m + j, p);
            if (w - static_cast<std::int64_t>(nu_factorial(j, p)) > carries)
                return false;
        }
    }
    return true;
}

std::vector<DensityPoint> density_sweep(Natural N, const std::vector<double>& c_list, DensityKind kind,
                                        KRule k_rule, unsigned threads)
{
    if (N < 2)
        throw std::invalid_argument("density_sweep: N must be >= 2");
    for (double c : c_list)
        if (!(c > 0.0))
            throw std::invalid_argument("density_sweep: every c must be positive");

    const std::size_t nc = c_list.size();
    auto count_block = [&](Natural a, Natural b) {
        std::vector<Natural> hits(nc, 0);
        for (Natural m = a; m <= b; ++m)
            for (std::size_t i = 0; i < nc; ++i) {
                const Natural k = block_length(m, c_list[i], k_rule);
                bool ok = true;
                if (k > 0)
                    ok = kind == DensityKind::interval_product ? interval_product_divides(m, k)
                                                               : binom_divides_all_up_to(m, k);
                hits[i] += ok ? 1 : 0;
            }
        return hits;
    };
    auto merge = [](std::vector<Natural> acc, std::vector<Natural> part) {
        for (std::size_t i = 0; i < acc.size(); ++i)
            acc[i] += part[i];
        return acc;
    };
    const auto hits = reduce_range(2, N, threads, std::vector<Natural>(nc, 0), count_block, merge);

    std::vector<DensityPoint> out;
    for (std::size_t i = 0; i < nc; ++i) {
        DensityPoint pt;
        pt.N = N;
        pt.c = c_list[i];
        pt.kind = kind;
        pt.k_rule = k_rule;
        pt.total = N - 1;
        pt.hits = hits[i];
        pt.fraction = static_cast<double>(pt.hits) / static_cast<double>(pt.total);
        out.push_back(pt);
    }
    return out;
}

bool sharpness_blocked(Natural m, double c)
{
    const Natural k = block_length(m, c, KRule::c_log_m);
    // nu_2(k!) = k - s_2(k) and kappa_2(m) = s_2(m).
    return k - digit_sum(k, 2) > digit_sum(m, 2);
}

SharpnessCount sharpness_census(Natural N, double c, unsigned threads)
{
    if (N < 2)
        throw std::invalid_argument("sharpness_census: N must be >= 2");
    if (!(c > 0.0))
        throw std::invalid_argument("sharpness_census: c must be positive");
    auto count_block = [&](Natural a, Natural b) {
        Natural n = 0;
        for (Natural m = a; m <= b; ++m)
            n += sharpness_blocked(m, c) ? 1 : 0;
        return n;
    };
    SharpnessCount out;
    out.N = N;
    out.c = c;
    out.total = N - 1;
    out.blocked = reduce_range(2, N, threads, Natural{0}, count_block, std::plus<>{});
    return out;
}

std::vector<ObstructionWitness> obstruction_witnesses(Natural m, Natural K, const Ratio& delta)
{
    if (delta <= Ratio(0) || delta >= Ratio(1))
        throw std::invalid_argument("obstruction_witnesses: delta must lie in (0, 1)");
    if (K == 0)
        return {};
    const Ratio upper = Ratio(static_cast<std::int64_t>(K)) * (Ratio(1) + delta);
    const auto hi = static_cast<Natural>(upper.num() / upper.den());

    std::vector<ObstructionWitness> out;
    for (Natural p : primes_in(K, hi)) {
        if (kappa(m, p) != 0)
            continue;
        const Natural low_digit = m % p;
        if (low_digit + K < p || low_digit > (p - 1) / 2)
            continue;
        ObstructionWitness w;
        w.m = m;
        w.k = K;
        w.p = p;
        w.kappa_p = 0;
        w.nu_binom = nu_binomial(m + K, K, p);
        if (w.nu_binom == 0)
            continue;
        out.push_back(w);
    }
    return out;
}

std::vector<ObstructionWitness> obstruction_scan(Natural m, double c, const Ratio& delta)
{
    if (m < 16)
        throw std::invalid_argument("obstruction_scan: m must be >= 16");
    return obstruction_witnesses(m, block_length(m, c, KRule::exp_c_sqrt_log_m), delta);
}

namespace {

bool gap_holds(Natural m, Natural K, double c2, const GapRule& rule)
{
    const double lm = std::log(static_cast<double>(m));
    const Natural P = rule.rule == PrimeBoundRule::exp_sqrt_log
                          ? static_cast<Natural>(std::floor(std::exp(rule.c_p * std::sqrt(lm))))
                          : 2 * K;
    // Primes that can fail: those under a positive threshold, and those
    // dividing the block (the only ones with nu_p(C(m+k, k)) > 0).
    auto candidates = block_primes(m, K);
    if (c2 > 0.0) {
        auto small = primes_up_to(P);
        candidates.insert(candidates.end(), small.begin(), small.end());
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    }
    for (Natural k = 1; k <= K; ++k) {
        const Natural bound = rule.rule == PrimeBoundRule::two_k ? 2 * k : P;
        for (Natural p : candidates)
            if (!gap_report(m, k, p, c2, bound).meets)
                return false;
    }
    return true;
}

}  // namespace

GapSummary gap_statistics(Natural N, double c, double c2, const GapRule& rule, unsigned threads)
{
    if (N < 2)
        throw std::invalid_argument("gap_statistics: N must be >= 2");
    if (!(c > 0.0) || c2 < 0.0)
        throw std::invalid_argument("gap_statistics: need c > 0 and c2 >= 0");
    auto count_block = [&](Natural a, Natural b) {
        Natural n = 0;
        for (Natural m = a; m <= b; ++m)
            n += gap_holds(m, block_length(m, c, KRule::exp_c_sqrt_log_m), c2, rule) ? 1 : 0;
        return n;
    };
    GapSummary out;
    out.N = N;
    out.c = c;
    out.c2 = c2;
    out.total = N - 1;
    out.hits = reduce_range(2, N, threads, Natural{0}, count_block, std::plus<>{});
    out.fraction = static_cast<double>(out.hits) / static_cast<double>(out.total);
    return out;
}

}  // namespace binomgap
