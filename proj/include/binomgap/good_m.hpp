#pragma once

// Search for "good" m in [M, 2M]: integers whose base-p carries dominate the
// largest prime power in the block m+1, ..., m+k for every p <= 2k, which
// yields the triple (m+k, m, 2m) with a! b! | n! k!.

#include "binomgap/divisibility.hpp"
#include "binomgap/primes.hpp"
#include "binomgap/ratio.hpp"

#include <optional>
#include <vector>

namespace binomgap {

enum class TPolicy { paper_10loglog, appendix_loglog, fixed };

struct TRule {
    TPolicy policy = TPolicy::paper_10loglog;
    unsigned fixed_value = 0;
};

// paper: no bad carry and no bad spike for every p <= 2k.
// direct: V_p(m, k) <= kappa_p(m) for every p <= 2k.
enum class GoodMode { paper, direct };

struct SearchParams {
    Natural M = 0;
    double c = 1.0;
    double C1 = 0.5;
    double C2 = 2.0;
    Ratio eta{1, 10};
    TRule t_rule{};
    GoodMode mode = GoodMode::direct;
    double epsilon = 0.2;
    unsigned threads = 1;
};

struct PrimeRow {
    Natural p = 0;
    unsigned L = 0;  // digit depth, largest L with p^L <= M^(1-eta)
    Ratio theta;     // probability that a digit is >= ceil(p/2)
    Ratio mu;        // L * theta
    unsigned J = 0;  // floor(log_p k)
};

struct DerivedParams {
    Natural M = 0;
    Natural k = 0;
    unsigned t = 0;
    std::vector<PrimeRow> rows;  // one per prime p <= 2k, ascending
    // mu_p / 2 >= J_p + t + 3 for every row; when true, paper-mode goodness
    // implies direct-mode goodness.
    bool threshold_holds = false;
};

Ratio theta(Natural p);
unsigned digit_depth(Natural M, Natural p, const Ratio& eta);
unsigned t_value(Natural M, const TRule& rule);

// Throws std::invalid_argument when M < 3, eta is outside (0,1) or k = 0.
DerivedParams derive_params(const SearchParams& sp);

bool is_bad_carry(Natural m, const PrimeRow& row);
bool is_bad_spike(Natural m, Natural k, const PrimeRow& row, unsigned t);
bool is_good(Natural m, const DerivedParams& dp, GoodMode mode);

struct PrimeWitness {
    Natural p = 0;
    unsigned big_digits = 0;       // X_p(m)
    unsigned v_max = 0;
    unsigned kappa = 0;
    unsigned spike_threshold = 0;  // J_p + t
};

struct GoodCertificate {
    Natural m = 0;
    Natural k = 0;
    Triple triple;
    GoodMode mode = GoodMode::direct;
    std::vector<PrimeWitness> witnesses;
    double k_over_log_n = 0.0;
    bool log_window_ok = false;  // C1 log n < k < C2 log n
    bool band_ok = false;        // eps n <= a, b <= (1 - eps) n
    bool window_ok = false;
    bool divisibility_verified = false;
    bool big_integer_checked = false;
};

struct ScanResult {
    DerivedParams params;
    std::optional<GoodCertificate> certificate;
};

// Smallest good m in [M, 2M].  In paper mode a candidate must also pass the
// direct predicate before it is certified.  A certificate whose triple fails
// the independent divisibility check throws std::logic_error.
ScanResult scan(const SearchParams& sp);

struct CensusRow {
    Natural p = 0;
    unsigned L = 0;
    Ratio mu;
    unsigned J = 0;
    unsigned t = 0;
    Natural bad_carry_count = 0;
    double bad_carry_bound = 0.0;
    Natural bad_spike_count = 0;
    double bad_spike_bound = 0.0;
    bool within_bounds = false;
};

struct CensusReport {
    DerivedParams params;
    std::vector<CensusRow> rows;
    Natural bad_union_count = 0;
    Natural interval_size = 0;
};

// Relative slack allowed on the bound side when comparing exact counts
// against double-precision bounds.
inline constexpr double kBoundSlack = 1e-9;

double bad_carry_bound(Natural M, const PrimeRow& row);
double bad_spike_bound(Natural M, Natural k, const PrimeRow& row, unsigned t);

CensusReport census(const SearchParams& sp);

}  // namespace binomgap
