#pragma once

// Command surface of the `binomgap` tool.  Each command renders to a string
// so the exact bytes written by the CLI can be compared in tests.

#include "binomgap/carry_chain.hpp"
#include "binomgap/density.hpp"
#include "binomgap/good_m.hpp"

#include <json.hpp>

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace binomgap::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMiss = 3;

// Shortest decimal string that round-trips to the same double.
std::string format_double(double x);

// Centered moving average; near the ends the window shrinks to the points
// that exist.  window must be odd and >= 1.
std::vector<double> moving_average(std::span<const double> values, unsigned window);

Json verify_report(Natural m, Natural k);
Json triple_report(const Triple& t, double epsilon);
Json search_report(const SearchParams& sp, const ScanResult& result);
Json census_json(const CensusReport& report);
std::string census_csv(const CensusReport& report);

struct ChainRow {
    CarryChainSpec spec;
    TailResult result;
};
std::string chain_csv(std::span<const ChainRow> rows);
std::string rate_csv(std::span<const double> deltas);

std::string density_csv(std::span<const DensityPoint> points);
std::string sharpness_csv(std::span<const SharpnessCount> rows);
std::string gap_csv(std::span<const GapSummary> rows, const GapRule& rule);
Json obstruct_report(std::span<const ObstructionWitness> witnesses);

std::string figure1_csv(Natural m_lo, Natural m_hi, Natural k, Natural p, unsigned window);

// Parses argv and runs one subcommand, writing results to `out` (or to the
// files named by --out) and diagnostics to `err`.  Returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace binomgap::cli
