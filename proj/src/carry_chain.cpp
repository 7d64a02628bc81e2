#include "binomgap/carry_chain.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace binomgap {

namespace {

void require_prime_base(Natural p)
{
    if (p < 2)
        throw std::invalid_argument("carry chain: p must be a prime >= 2");
}

void require_delta(double delta)
{
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("delta must lie in (0, 1), got " + std::to_string(delta));
}

// Largest j with j <= s L, or -1 when none.
std::int64_t tail_cutoff(unsigned L, const Ratio& s)
{
    if (s < Ratio(0))
        return -1;
    __int128 bound = static_cast<__int128>(s.num()) * L / s.den();
    return static_cast<std::int64_t>(std::min<__int128>(bound, L));
}

}  // namespace

TransitionMatrix transition_matrix(Natural p)
{
    require_prime_base(p);
    TransitionMatrix t;
    if (p == 2) {
        t.entries = {{{0.5, 0.5}, {0.5, 0.5}}};
        return t;
    }
    const double h = 1.0 / (2.0 * static_cast<double>(p));
    t.entries = {{{0.5 + h, 0.5 - h}, {0.5 - h, 0.5 + h}}};
    return t;
}

std::array<std::array<Natural, 2>, 2> carry_digit_counts(Natural p)
{
    require_prime_base(p);
    std::array<std::array<Natural, 2>, 2> counts{};
    for (Natural u = 0; u < 2; ++u)
        for (Natural a = 0; a < p; ++a)
            ++counts[u][(2 * a + u >= p) ? 1 : 0];
    return counts;
}

PerronPair perron(Natural p, double lambda)
{
    const auto P = transition_matrix(p);
    const double w = std::exp(lambda);
    const double a = P(0, 0);
    const double b = P(0, 1) * w;
    const double c = P(1, 0);
    const double d = P(1, 1) * w;

    PerronPair out;
    const double half_diff = 0.5 * (a - d);
    out.rho = 0.5 * (a + d) + std::sqrt(half_diff * half_diff + b * c);
    // (b, rho - a) solves the first row; both entries are positive.
    double v0 = b;
    double v1 = out.rho - a;
    const double lo = std::min(v0, v1);
    out.vector = {v0 / lo, v1 / lo};
    out.ratio = std::max(out.vector[0], out.vector[1]);
    return out;
}

double tilted_eigenvalue(Natural p, double lambda)
{
    return perron(p, lambda).rho;
}

double limit_eigenvalue(double lambda)
{
    return 0.5 * (1.0 + std::exp(lambda));
}

double moment_generating(Natural p, unsigned L, double lambda)
{
    const auto P = transition_matrix(p);
    const double w = std::exp(lambda);
    // Row vector e0^T T^L, then dotted with 1.
    std::array<double, 2> row{1.0, 0.0};
    for (unsigned i = 0; i < L; ++i) {
        std::array<double, 2> next{};
        for (int u = 0; u < 2; ++u) {
            next[0] += row[u] * P(u, 0);
            next[1] += row[u] * P(u, 1) * w;
        }
        row = next;
    }
    return row[0] + row[1];
}

double rate_function(double delta)
{
    require_delta(delta);
    return 0.5 * ((1.0 - delta) * std::log1p(-delta) + (1.0 + delta) * std::log1p(delta));
}

double optimal_tilt(double delta)
{
    require_delta(delta);
    return std::log1p(-delta) - std::log1p(delta);
}

std::vector<double> carry_count_distribution(Natural p, unsigned L)
{
    const auto P = transition_matrix(p);
    // dist[u][j] = P(current carry u, j carries so far).
    std::array<std::vector<double>, 2> dist{std::vector<double>(L + 1, 0.0), std::vector<double>(L + 1, 0.0)};
    dist[0][0] = 1.0;
    for (unsigned i = 0; i < L; ++i) {
        std::array<std::vector<double>, 2> next{std::vector<double>(L + 1, 0.0), std::vector<double>(L + 1, 0.0)};
        for (int u = 0; u < 2; ++u)
            for (unsigned j = 0; j <= i; ++j) {
                const double mass = dist[u][j];
                if (mass == 0.0)
                    continue;
                next[0][j] += mass * P(u, 0);
                next[1][j + 1] += mass * P(u, 1);
            }
        dist = std::move(next);
    }
    std::vector<double> out(L + 1);
    for (unsigned j = 0; j <= L; ++j)
        out[j] = dist[0][j] + dist[1][j];
    return out;
}

std::vector<mpz_class> carry_count_histogram(Natural p, unsigned L)
{
    const auto counts = carry_digit_counts(p);
    std::array<std::vector<mpz_class>, 2> dist{std::vector<mpz_class>(L + 1), std::vector<mpz_class>(L + 1)};
    dist[0][0] = 1;
    for (unsigned i = 0; i < L; ++i) {
        std::array<std::vector<mpz_class>, 2> next{std::vector<mpz_class>(L + 1), std::vector<mpz_class>(L + 1)};
        for (int u = 0; u < 2; ++u)
            for (unsigned j = 0; j <= i; ++j) {
                if (dist[u][j] == 0)
                    continue;
                next[0][j] += dist[u][j] * static_cast<unsigned long>(counts[u][0]);
                next[1][j + 1] += dist[u][j] * static_cast<unsigned long>(counts[u][1]);
            }
        dist = std::move(next);
    }
    std::vector<mpz_class> out(L + 1);
    for (unsigned j = 0; j <= L; ++j)
        out[j] = dist[0][j] + dist[1][j];
    return out;
}

double exact_tail(Natural p, unsigned L, const Ratio& s)
{
    const auto cutoff = tail_cutoff(L, s);
    if (cutoff < 0)
        return 0.0;
    const auto dist = carry_count_distribution(p, L);
    double total = 0.0;
    for (std::int64_t j = 0; j <= cutoff; ++j)
        total += dist[static_cast<std::size_t>(j)];
    return std::min(total, 1.0);
}

mpq_class exact_tail_rational(Natural p, unsigned L, const Ratio& s)
{
    const auto cutoff = tail_cutoff(L, s);
    if (cutoff < 0)
        return 0;
    const auto hist = carry_count_histogram(p, L);
    mpz_class hits = 0;
    for (std::int64_t j = 0; j <= cutoff; ++j)
        hits += hist[static_cast<std::size_t>(j)];
    mpz_class denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), static_cast<unsigned long>(p), L);
    mpq_class out(hits, denom);
    out.canonicalize();
    return out;
}

double expected_carry_fraction(Natural p, unsigned L)
{
    if (L == 0)
        return 0.0;
    const auto P = transition_matrix(p);
    double one = 0.0;  // P(C_i = 1)
    double total = 0.0;
    for (unsigned i = 0; i < L; ++i) {
        one = (1.0 - one) * P(0, 1) + one * P(1, 1);
        total += one;
    }
    return total / static_cast<double>(L);
}

CarryChainSpec CarryChainSpec::from_delta(Natural p, unsigned L, const Ratio& delta)
{
    CarryChainSpec spec;
    spec.p = p;
    spec.L = L;
    spec.s = (Ratio(1) - delta) / Ratio(2);
    spec.lambda = optimal_tilt(delta.value());
    return spec;
}

TailResult tail_bounds(const CarryChainSpec& spec)
{
    if (spec.lambda > 0.0)
        throw std::invalid_argument("tail_bounds: the lower-tail bound needs lambda <= 0");
    TailResult out;
    out.exact = exact_tail(spec.p, spec.L, spec.s);
    const auto pair = perron(spec.p, spec.lambda);
    out.rho_used = pair.rho;
    out.C_used = pair.constant();
    const double L = spec.L;
    out.tilted_bound = out.C_used * std::exp(L * (std::log(pair.rho) - spec.lambda * spec.s.value()));
    if (spec.p == 2 && spec.s == Ratio(1, 4))
        out.chernoff_bound = std::exp(-(L / 2.0) / 8.0);

    if (out.exact > out.tilted_bound)
        throw std::logic_error("tail_bounds: exact tail exceeds the tilted bound");
    if (out.chernoff_bound && out.exact > *out.chernoff_bound)
        throw std::logic_error("tail_bounds: exact tail exceeds the Chernoff bound");
    return out;
}

std::uint64_t SplitMix64::next()
{
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound)
{
    if (bound == 0)
        throw std::invalid_argument("SplitMix64::below: bound must be positive");
    // Reject the top partial bucket so every residue is equally likely.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = next();
    while (x >= limit)
        x = next();
    return x % bound;
}

ChainEstimate empirical_chain_check(Natural p, unsigned L, std::uint64_t trials, std::uint64_t seed)
{
    if (trials == 0)
        throw std::invalid_argument("empirical_chain_check: trials must be >= 1");
    require_prime_base(p);
    ChainEstimate out;
    if (L == 0)
        return out;
    SplitMix64 rng(seed);
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        unsigned carries = 0;
        Natural carry = 0;
        for (unsigned i = 0; i < L; ++i) {
            carry = (2 * rng.below(p) + carry >= p) ? 1 : 0;
            carries += static_cast<unsigned>(carry);
        }
        const double frac = static_cast<double>(carries) / L;
        sum += frac;
        sum_sq += frac * frac;
    }
    const auto n = static_cast<double>(trials);
    out.mean_fraction = sum / n;
    const double var = trials > 1 ? std::max(0.0, (sum_sq - n * out.mean_fraction * out.mean_fraction) / (n - 1)) : 0.0;
    out.std_error = std::sqrt(var / n);
    return out;
}

}  // namespace binomgap
