#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "scsk/counters.hpp"
#include "scsk/instance.hpp"
#include "scsk/solver.hpp"

namespace scsk::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kInvalidInstance = 2,
  kOracleLimits = 3,
  kOracleDisagreement = 4,
};

struct GenParams {
  std::size_t n = 3;
  int min_len = 1;
  int max_len = 4;
  int alphabet = 2;  // symbols 'a', 'b', ...
};

/// Parses "n=<int>,len=<a>..<b>,alphabet=<int>". Throws InputError.
GenParams parse_gen_spec(std::string_view spec);

/// Draws strings from std::mt19937_64 seeded with `seed`: a length uniform in
/// [min_len, max_len], then each symbol uniform over the alphabet, both via
/// `engine() % range`. A draw equal to, containing, or contained in an earlier
/// string is discarded. Gives up with GenerationError("generation infeasible")
/// after 1000 * n discarded draws.
Instance generate_instance(const GenParams& params, std::uint64_t seed, long long k = 0);

struct RunConfig {
  std::optional<std::string> input_path;
  std::optional<std::string> inline_strings;  // comma separated
  std::optional<GenParams> gen;
  std::uint64_t seed = 1;
  long long k = 0;
  bool reconstruct = false;
  bool verify = false;
  bool oracle_check = false;
  bool json = false;
  bool counters = false;
  unsigned threads = 0;
  bool engulf_pass = true;
};

/// Output document with keys in fixed order: n, k, length,
/// mistake_string_index, witness, offsets, mismatch_positions, counters.
nlohmann::ordered_json solution_json(const Instance& instance, const Solution& solution,
                                     const PhaseCounters* counters);

/// Runs one solve as configured, writing results to `out` and diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace scsk::cli
