#include "cli.hpp"

#include "binomgap/divisibility.hpp"
#include "binomgap/valuation.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace binomgap::cli {

std::string format_double(double x)
{
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc{})
        throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, ptr);
}

std::vector<double> moving_average(std::span<const double> values, unsigned window)
{
    if (window == 0 || window % 2 == 0)
        throw std::invalid_argument("moving_average: window must be odd and >= 1");
    const std::size_t half = window / 2;
    const std::size_t n = values.size();
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t lo = i >= half ? i - half : 0;
        const std::size_t hi = std::min(n - 1, i + half);
        double sum = 0.0;
        for (std::size_t j = lo; j <= hi; ++j)
            sum += values[j];
        out[i] = sum / static_cast<double>(hi - lo + 1);
    }
    return out;
}

namespace {

const char* to_string(GoodMode mode)
{
    return mode == GoodMode::direct ? "direct" : "paper";
}

std::string to_string(const TRule& rule)
{
    switch (rule.policy) {
    case TPolicy::paper_10loglog:
        return "paper-10loglog";
    case TPolicy::appendix_loglog:
        return "appendix-loglog";
    case TPolicy::fixed:
        return "fixed(" + std::to_string(rule.fixed_value) + ")";
    }
    return "?";
}

Json profile_json(const ValuationProfile& v)
{
    Json j;
    j["p"] = v.p;
    j["kappa"] = v.kappa;
    j["v_max"] = v.v_max;
    j["w_sum"] = v.w_sum;
    j["nu_k_factorial"] = v.nu_k_factorial;
    j["nu_binom_mk"] = v.nu_binom_mk;
    return j;
}

Json triple_json(const Triple& t)
{
    Json j;
    j["a"] = t.a;
    j["b"] = t.b;
    j["n"] = t.n;
    j["k"] = t.k();
    return j;
}

std::string oracle_mode_name(const FactorialVerdict& v)
{
    if (v.big_integer_divides)
        return "per-prime+big-integer";
    return "per-prime";
}

}  // namespace

Json verify_report(Natural m, Natural k)
{
    const bool divides = binom_divides(m, k);
    const auto failing = failing_primes(m, k);

    // The binomial statement is equivalent to the factorial one on the
    // family triple; run it as the independent route.
    const auto verdict = factorial_divides(family_triple(m, k), OracleMode::both);
    if (verdict.divides != divides)
        throw std::logic_error("verify: binomial and factorial routes disagree");

    std::vector<Natural> primes = primes_up_to(2 * k);
    for (Natural p : failing)
        if (p > 2 * k)
            primes.push_back(p);

    Json j;
    j["m"] = m;
    j["k"] = k;
    j["binom_divides"] = divides;
    j["failing_primes"] = failing;
    Json profiles = Json::array();
    for (Natural p : primes)
        profiles.push_back(profile_json(valuation_profile(m, k, p)));
    j["profiles"] = profiles;
    j["oracle_mode"] = oracle_mode_name(verdict);
    return j;
}

Json triple_report(const Triple& t, double epsilon)
{
    const auto verdict = factorial_divides(t, OracleMode::both);
    const auto n = static_cast<double>(t.n);
    const double lo = epsilon * n;
    const double hi = (1.0 - epsilon) * n;
    const auto a = static_cast<double>(t.a);
    const auto b = static_cast<double>(t.b);

    Json j = triple_json(t);
    j["divides"] = verdict.divides;
    j["failing_prime"] = verdict.failing_prime ? Json(*verdict.failing_prime) : Json(nullptr);
    j["oracle_mode"] = oracle_mode_name(verdict);
    j["k_over_log_n"] = t.n > 1 ? Json(static_cast<double>(t.k()) / std::log(n)) : Json(nullptr);
    j["epsilon"] = epsilon;
    j["band_ok"] = lo <= a && a <= hi && lo <= b && b <= hi;
    return j;
}

Json census_json(const CensusReport& report)
{
    Json j;
    j["interval_size"] = report.interval_size;
    j["bad_union_count"] = report.bad_union_count;
    Json rows = Json::array();
    for (const auto& r : report.rows) {
        Json row;
        row["p"] = r.p;
        row["L_p"] = r.L;
        row["mu_p"] = r.mu.value();
        row["J_p"] = r.J;
        row["t"] = r.t;
        row["bad_carry_count"] = r.bad_carry_count;
        row["bad_carry_bound"] = r.bad_carry_bound;
        row["bad_spike_count"] = r.bad_spike_count;
        row["bad_spike_bound"] = r.bad_spike_bound;
        row["within_bounds"] = r.within_bounds;
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j;
}

Json search_report(const SearchParams& sp, const ScanResult& result)
{
    const auto& dp = result.params;
    Json j;
    j["found"] = result.certificate.has_value();
    j["M"] = sp.M;
    j["c"] = sp.c;
    j["C1"] = sp.C1;
    j["C2"] = sp.C2;
    j["epsilon"] = sp.epsilon;
    j["eta"] = sp.eta.str();
    j["t_policy"] = to_string(sp.t_rule);
    j["mode"] = to_string(sp.mode);
    j["k"] = dp.k;
    j["t"] = dp.t;
    j["threshold_holds"] = dp.threshold_holds;
    if (const auto& cert = result.certificate) {
        j["m"] = cert->m;
        j["triple"] = triple_json(cert->triple);
        Json ws = Json::array();
        for (const auto& w : cert->witnesses) {
            Json wj;
            wj["p"] = w.p;
            wj["X_p"] = w.big_digits;
            wj["V_p"] = w.v_max;
            wj["kappa_p"] = w.kappa;
            wj["J_p_plus_t"] = w.spike_threshold;
            ws.push_back(wj);
        }
        j["witnesses"] = ws;
        j["k_over_log_n"] = cert->k_over_log_n;
        j["log_window_ok"] = cert->log_window_ok;
        j["band_ok"] = cert->band_ok;
        j["window_ok"] = cert->window_ok;
        j["divisibility_verified"] = cert->divisibility_verified;
        j["oracle_mode"] = cert->big_integer_checked ? "per-prime+big-integer" : "per-prime";
    }
    return j;
}

std::string census_csv(const CensusReport& report)
{
    std::ostringstream os;
    os << "p,L_p,mu_p,J_p,t,bad_carry_count,bad_carry_bound,bad_spike_count,bad_spike_bound,within_bounds\n";
    for (const auto& r : report.rows)
        os << r.p << ',' << r.L << ',' << format_double(r.mu.value()) << ',' << r.J << ',' << r.t << ','
           << r.bad_carry_count << ',' << format_double(r.bad_carry_bound) << ',' << r.bad_spike_count << ','
           << format_double(r.bad_spike_bound) << ',' << (r.within_bounds ? "true" : "false") << '\n';
    return os.str();
}

std::string chain_csv(std::span<const ChainRow> rows)
{
    std::ostringstream os;
    os << "p,L,s,exact_tail,tilted_bound,chernoff_bound,rho,C\n";
    for (const auto& row : rows) {
        const auto& r = row.result;
        os << row.spec.p << ',' << row.spec.L << ',' << format_double(row.spec.s.value()) << ','
           << format_double(r.exact) << ',' << format_double(r.tilted_bound) << ','
           << (r.chernoff_bound ? format_double(*r.chernoff_bound) : std::string()) << ','
           << format_double(r.rho_used) << ',' << format_double(r.C_used) << '\n';
    }
    return os.str();
}

std::string rate_csv(std::span<const double> deltas)
{
    std::ostringstream os;
    os << "delta,I_delta,lambda_star,identity_residual\n";
    for (double delta : deltas) {
        const double rate = rate_function(delta);
        const double tilt = optimal_tilt(delta);
        const double s = (1.0 - delta) / 2.0;
        const double residual = std::abs(tilt * s - std::log(limit_eigenvalue(tilt)) - rate);
        os << format_double(delta) << ',' << format_double(rate) << ',' << format_double(tilt) << ','
           << format_double(residual) << '\n';
    }
    return os.str();
}

std::string density_csv(std::span<const DensityPoint> points)
{
    std::ostringstream os;
    os << "N,c,kind,k_rule,total,hits,fraction\n";
    for (const auto& pt : points)
        os << pt.N << ',' << format_double(pt.c) << ',' << to_string(pt.kind) << ',' << to_string(pt.k_rule)
           << ',' << pt.total << ',' << pt.hits << ',' << format_double(pt.fraction) << '\n';
    return os.str();
}

std::string sharpness_csv(std::span<const SharpnessCount> rows)
{
    std::ostringstream os;
    os << "N,c,blocked,total\n";
    for (const auto& r : rows)
        os << r.N << ',' << format_double(r.c) << ',' << r.blocked << ',' << r.total << '\n';
    return os.str();
}

std::string gap_csv(std::span<const GapSummary> rows, const GapRule& rule)
{
    std::ostringstream os;
    os << "N,c,c2,p_bound,total,hits,fraction\n";
    const std::string bound = rule.rule == PrimeBoundRule::two_k ? "2k" : "exp(" + format_double(rule.c_p) + "*sqrt(log m))";
    for (const auto& r : rows)
        os << r.N << ',' << format_double(r.c) << ',' << format_double(r.c2) << ',' << bound << ',' << r.total
           << ',' << r.hits << ',' << format_double(r.fraction) << '\n';
    return os.str();
}

Json obstruct_report(std::span<const ObstructionWitness> witnesses)
{
    Json list = Json::array();
    for (const auto& w : witnesses) {
        Json j;
        j["m"] = w.m;
        j["k"] = w.k;
        j["p"] = w.p;
        j["kappa_p"] = w.kappa_p;
        j["nu_binom"] = w.nu_binom;
        list.push_back(j);
    }
    return list;
}

std::string figure1_csv(Natural m_lo, Natural m_hi, Natural k, Natural p, unsigned window)
{
    if (m_lo > m_hi)
        throw std::invalid_argument("figure1: m_lo must not exceed m_hi");
    std::vector<Natural> ms;
    std::vector<double> nu_binom;
    std::vector<double> carries;
    for (Natural m = m_lo;; ++m) {
        ms.push_back(m);
        nu_binom.push_back(static_cast<double>(nu_binomial(m + k, k, p)));
        carries.push_back(static_cast<double>(kappa(m, p)));
        if (m == m_hi)
            break;
    }
    const auto nu_smooth = moving_average(nu_binom, window);
    const auto kappa_smooth = moving_average(carries, window);

    std::ostringstream os;
    os << "m,nu_binom,kappa,nu_binom_smooth,kappa_smooth\n";
    for (std::size_t i = 0; i < ms.size(); ++i)
        os << ms[i] << ',' << static_cast<Natural>(nu_binom[i]) << ',' << static_cast<Natural>(carries[i]) << ','
           << format_double(nu_smooth[i]) << ',' << format_double(kappa_smooth[i]) << '\n';
    return os.str();
}

namespace {

void emit(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot open output file '" + path + "'");
    file << text;
}

// Fills options not given on the command line from a key=value file.
void apply_config(CLI::App& sub, const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw CLI::FileError::Missing(path);
    for (const auto& item : CLI::ConfigINI().from_config(in)) {
        if (!item.parents.empty() && !(item.parents.size() == 1 && item.parents[0] == sub.get_name()))
            continue;
        CLI::Option* op = sub.get_option_no_throw("--" + item.name);
        if (op == nullptr || item.name == "config")
            throw CLI::ConfigError::Extras(item.fullname());
        if (op->count() > 0)
            continue;
        for (const auto& value : item.inputs)
            op->add_result(value);
        op->run_callback();
    }
}

std::string json_text(const Json& j)
{
    return j.dump(2) + "\n";
}

TRule parse_t_rule(const std::string& policy, unsigned fixed_t)
{
    if (policy == "paper-10loglog")
        return {TPolicy::paper_10loglog, 0};
    if (policy == "appendix-loglog")
        return {TPolicy::appendix_loglog, 0};
    return {TPolicy::fixed, fixed_t};
}

struct SearchFlags {
    Natural M = 0;
    double c = 1.0;
    double C1 = 0.5;
    double C2 = 2.0;
    std::string eta = "1/10";
    std::string t_policy = "paper-10loglog";
    unsigned t = 0;
    std::string mode = "direct";
    double epsilon = 0.2;

    void add_to(CLI::App& app)
    {
        app.add_option("--M", M, "scale; the scan covers [M, 2M]")->required();
        app.add_option("--c", c, "k = floor(c log M)")->capture_default_str();
        app.add_option("--C1", C1, "lower window constant")->capture_default_str();
        app.add_option("--C2", C2, "upper window constant")->capture_default_str();
        app.add_option("--eta", eta, "digit-depth slack, rational in (0,1)")->capture_default_str();
        app.add_option("--t-policy", t_policy, "spike margin rule")
            ->check(CLI::IsMember({"paper-10loglog", "appendix-loglog", "fixed"}))
            ->capture_default_str();
        app.add_option("--t", t, "spike margin for --t-policy fixed");
        app.add_option("--mode", mode, "goodness predicate")
            ->check(CLI::IsMember({"paper", "direct"}))
            ->capture_default_str();
        app.add_option("--epsilon", epsilon, "band for eps n <= a, b <= (1-eps) n")->capture_default_str();
    }

    SearchParams params(unsigned threads) const
    {
        SearchParams sp;
        sp.M = M;
        sp.c = c;
        sp.C1 = C1;
        sp.C2 = C2;
        sp.eta = Ratio::parse(eta);
        sp.t_rule = parse_t_rule(t_policy, t);
        sp.mode = mode == "paper" ? GoodMode::paper : GoodMode::direct;
        sp.epsilon = epsilon;
        sp.threads = threads;
        return sp;
    }
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Carry counting and divisibility of central binomial coefficients"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    unsigned threads = 1;
    std::uint64_t seed = 0;
    std::string out_path;
    std::string config_path;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--threads", threads, "worker threads")->capture_default_str();
        sub->add_option("--seed", seed, "seed for randomized runs")->capture_default_str();
        sub->add_option("--out", out_path, "output file (default: stdout)");
        sub->add_option("--config", config_path, "key=value file mirroring the flags (flags win)");
    };

    Natural m = 0;
    Natural k = 0;
    auto* verify = app.add_subcommand("verify", "check C(m+k, k) | C(2m, m) prime by prime");
    verify->add_option("--m", m)->required();
    verify->add_option("--k", k)->required();
    common(verify);

    Natural a = 0;
    Natural b = 0;
    Natural n = 0;
    double epsilon = 0.2;
    auto* triple = app.add_subcommand("triple", "check a! b! | n! (a+b-n)!");
    triple->add_option("--a", a)->required();
    triple->add_option("--b", b)->required();
    triple->add_option("--n", n)->required();
    triple->add_option("--epsilon", epsilon)->capture_default_str();
    common(triple);

    SearchFlags search_flags;
    bool require_hit = false;
    auto* search = app.add_subcommand("search", "find the smallest good m in [M, 2M]");
    search_flags.add_to(*search);
    search->add_flag("--require-hit", require_hit, "exit 3 when no good m exists");
    common(search);

    SearchFlags census_flags;
    std::string census_format = "csv";
    auto* census_cmd = app.add_subcommand("census", "count bad-carry and bad-spike m in [M, 2M]");
    census_flags.add_to(*census_cmd);
    census_cmd->add_option("--format", census_format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    common(census_cmd);

    std::vector<Natural> chain_p{2};
    std::vector<unsigned> chain_L{4};
    std::vector<std::string> chain_s;
    std::vector<std::string> chain_delta;
    std::optional<double> chain_lambda;
    auto* chain = app.add_subcommand("chain", "exact carry-count tails against their bounds");
    chain->add_option("--p", chain_p)->capture_default_str();
    chain->add_option("--L", chain_L)->capture_default_str();
    auto* s_opt = chain->add_option("--s", chain_s, "tail fraction(s), rational");
    chain->add_option("--delta", chain_delta, "deviation(s); s = (1-delta)/2")->excludes(s_opt);
    chain->add_option("--lambda", chain_lambda, "tilt (default: the Bernoulli(1/2) optimal tilt)");
    common(chain);

    std::vector<double> rate_delta;
    auto* rate = app.add_subcommand("rate", "rate function, optimal tilt and their identity");
    rate->add_option("--delta", rate_delta, "default grid 0.05, 0.10, ..., 0.95");
    common(rate);

    Natural density_N = 100000;
    std::vector<double> density_c{0.4, 0.9};
    std::string density_kind = "interval-product";
    std::string density_rule = "c-log-m";
    auto* density = app.add_subcommand("density", "divisibility frequency for m in [2, N]");
    density->add_option("--N", density_N)->capture_default_str();
    density->add_option("--c", density_c)->capture_default_str();
    density->add_option("--kind", density_kind)
        ->check(CLI::IsMember({"interval-product", "binomial"}))
        ->capture_default_str();
    density->add_option("--k-rule", density_rule)
        ->check(CLI::IsMember({"c-log-m", "exp-c-sqrt-log-m"}))
        ->capture_default_str();
    common(density);

    Natural sharp_N = 100000;
    std::vector<double> sharp_c{0.9};
    auto* sharpness = app.add_subcommand("sharpness", "count m with nu_2(k!) > s_2(m)");
    sharpness->add_option("--N", sharp_N)->capture_default_str();
    sharpness->add_option("--c", sharp_c)->capture_default_str();
    common(sharpness);

    Natural gap_N = 10000;
    std::vector<double> gap_c{0.5};
    std::vector<double> gap_c2{0.0};
    std::string gap_bound = "2k";
    double gap_cp = 0.8;
    auto* gap = app.add_subcommand("gap", "fraction of m whose valuation gaps clear a threshold");
    gap->add_option("--N", gap_N)->capture_default_str();
    gap->add_option("--c", gap_c)->capture_default_str();
    gap->add_option("--c2", gap_c2)->capture_default_str();
    gap->add_option("--p-bound", gap_bound)->check(CLI::IsMember({"2k", "exp-sqrt-log"}))->capture_default_str();
    gap->add_option("--c-p", gap_cp, "P(m) = exp(c_p sqrt(log m)) for --p-bound exp-sqrt-log")
        ->capture_default_str();
    common(gap);

    Natural obstruct_m = 0;
    std::optional<double> obstruct_c;
    std::optional<Natural> obstruct_K;
    std::string obstruct_delta = "1/2";
    auto* obstruct = app.add_subcommand("obstruct", "primes with no carries that still divide C(m+K, K)");
    obstruct->add_option("--m", obstruct_m)->required();
    auto* c_opt = obstruct->add_option("--c", obstruct_c, "K = floor(exp(c sqrt(log m)))");
    obstruct->add_option("--K", obstruct_K, "block length, instead of --c")->excludes(c_opt);
    obstruct->add_option("--delta", obstruct_delta, "prime window (K, (1+delta)K]")->capture_default_str();
    common(obstruct);

    Natural fig_lo = 1000;
    Natural fig_hi = 2000;
    Natural fig_k = 10;
    std::vector<Natural> fig_p{2, 13};
    unsigned fig_window = 25;
    std::string fig_prefix = "figure1";
    auto* figure1 = app.add_subcommand("figure1", "nu_p(C(m+k,k)) and kappa_p(m) with moving averages");
    figure1->add_option("--m-lo", fig_lo)->capture_default_str();
    figure1->add_option("--m-hi", fig_hi)->capture_default_str();
    figure1->add_option("--k", fig_k)->capture_default_str();
    figure1->add_option("--p", fig_p)->capture_default_str();
    figure1->add_option("--window", fig_window)->capture_default_str();
    figure1->add_option("--out-prefix", fig_prefix, "writes <prefix>_p<p>.csv per prime; '-' for stdout")
        ->capture_default_str();
    common(figure1);

    try {
        app.parse(argc, argv);
        if (!config_path.empty())
            apply_config(*app.get_subcommands().front(), config_path);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*verify) {
            emit(json_text(verify_report(m, k)), out_path, out);
        } else if (*triple) {
            if (a + b < n) {
                err << "triple: need a + b >= n\n";
                return kExitUsage;
            }
            emit(json_text(triple_report(Triple{a, b, n}, epsilon)), out_path, out);
        } else if (*search) {
            const auto sp = search_flags.params(threads);
            const auto result = scan(sp);
            Json j = search_report(sp, result);
            if (!result.certificate)
                j["census"] = census_json(binomgap::census(sp));
            emit(json_text(j), out_path, out);
            if (!result.certificate && require_hit)
                return kExitMiss;
        } else if (*census_cmd) {
            const auto report = binomgap::census(census_flags.params(threads));
            emit(census_format == "csv" ? census_csv(report) : json_text(census_json(report)), out_path, out);
        } else if (*chain) {
            std::vector<ChainRow> rows;
            std::vector<std::string> fractions = chain_delta.empty() ? chain_s : chain_delta;
            if (fractions.empty())
                fractions.push_back("1/4");
            for (Natural p : chain_p) {
                if (!is_prime(p))
                    throw std::invalid_argument("chain: p=" + std::to_string(p) + " is not prime");
                for (unsigned L : chain_L)
                    for (const auto& text : fractions) {
                        const Ratio value = Ratio::parse(text);
                        CarryChainSpec spec;
                        if (!chain_delta.empty()) {
                            spec = CarryChainSpec::from_delta(p, L, value);
                        } else {
                            spec.p = p;
                            spec.L = L;
                            spec.s = value;
                            const Ratio delta = Ratio(1) - Ratio(2) * value;
                            spec.lambda = (delta > Ratio(0) && delta < Ratio(1)) ? optimal_tilt(delta.value()) : 0.0;
                        }
                        if (chain_lambda)
                            spec.lambda = *chain_lambda;
                        rows.push_back({spec, tail_bounds(spec)});
                    }
            }
            emit(chain_csv(rows), out_path, out);
        } else if (*rate) {
            if (rate_delta.empty())
                for (int j = 1; j <= 19; ++j)
                    rate_delta.push_back(0.05 * j);
            emit(rate_csv(rate_delta), out_path, out);
        } else if (*density) {
            const auto kind = density_kind == "binomial" ? DensityKind::binomial : DensityKind::interval_product;
            const auto rule = density_rule == "c-log-m" ? KRule::c_log_m : KRule::exp_c_sqrt_log_m;
            emit(density_csv(density_sweep(density_N, density_c, kind, rule, threads)), out_path, out);
        } else if (*sharpness) {
            std::vector<SharpnessCount> rows;
            for (double c : sharp_c)
                rows.push_back(sharpness_census(sharp_N, c, threads));
            emit(sharpness_csv(rows), out_path, out);
        } else if (*gap) {
            GapRule rule{gap_bound == "2k" ? PrimeBoundRule::two_k : PrimeBoundRule::exp_sqrt_log, gap_cp};
            std::vector<GapSummary> rows;
            for (double c : gap_c)
                for (double c2 : gap_c2)
                    rows.push_back(gap_statistics(gap_N, c, c2, rule, threads));
            emit(gap_csv(rows, rule), out_path, out);
        } else if (*obstruct) {
            const Ratio delta = Ratio::parse(obstruct_delta);
            std::vector<ObstructionWitness> ws;
            if (obstruct_K)
                ws = obstruction_witnesses(obstruct_m, *obstruct_K, delta);
            else if (obstruct_c)
                ws = obstruction_scan(obstruct_m, *obstruct_c, delta);
            else
                throw std::invalid_argument("obstruct: give --c or --K");
            emit(json_text(obstruct_report(ws)), out_path, out);
        } else if (*figure1) {
            for (Natural p : fig_p) {
                if (!is_prime(p))
                    throw std::invalid_argument("figure1: p=" + std::to_string(p) + " is not prime");
                const auto text = figure1_csv(fig_lo, fig_hi, fig_k, p, fig_window);
                emit(text, fig_prefix == "-" ? fig_prefix : fig_prefix + "_p" + std::to_string(p) + ".csv", out);
            }
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace binomgap::cli
