#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "scsk/core_tables.hpp"
#include "scsk/counters.hpp"
#include "scsk/instance.hpp"
#include "scsk/mismatch_tables.hpp"
#include "scsk/subset_dp.hpp"

namespace scsk {

enum class ArrangementKind {
  single,         // n = 1
  mistake_first,  // m at the left end, anchored by r, everything else to the right
  mistake_last,   // m at the right end, anchored by l, everything else to the left
  triple,         // core (l, m, r) with a bipartition of the rest
  engulf,         // m strictly spans one or more exact strings
};

/// Which composition produced the optimum. For `triple`, `left_set` holds
/// the strings chained left of l (l itself excluded).
struct Arrangement {
  ArrangementKind kind = ArrangementKind::single;
  std::size_t m = 0;
  std::optional<std::size_t> l;
  std::optional<std::size_t> r;
  Mask left_set = 0;
};

struct Witness {
  Sequence text;
  std::vector<int> offsets;
  std::vector<int> mismatch_positions;  // witness positions where m disagrees
};

struct Solution {
  int length = 0;
  std::size_t m_index = 0;
  Arrangement arrangement;
  std::optional<Witness> witness;
};

struct SolverOptions {
  bool reconstruct = false;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Also search arrangements where m strictly contains other strings.
  /// Without it the result can exceed the optimum when k > 0.
  bool engulf_pass = true;
  std::size_t max_strings = kDefaultMaxStrings;
};

/// Everything precomputed before composition.
struct SolverTables {
  MistakeTable mistakes;
  CoreTable cores;
  OverlapTable overlaps;
  SubsetTable subsets;

  static SolverTables build(const Instance& instance, PhaseCounters* counters = nullptr);
};

/// Minimal SCS_K length. Validates the instance first (ValidationError) and
/// enforces options.max_strings (InputError). The result and the chosen
/// arrangement do not depend on the thread count: ties go to the smallest
/// (m, kind, l, r, left_set).
Solution solve(const Instance& instance, const SolverOptions& options = {}, PhaseCounters* counters = nullptr);

/// Builds a witness for `arrangement`. Throws ReconstructionError("reconstruction mismatch")
/// if the result is inconsistent or its length differs from `expected_length`.
Witness reconstruct(const Instance& instance, const SolverTables& tables, const Arrangement& arrangement,
                    int expected_length);

struct VerificationReport {
  std::vector<std::string> violations;
  [[nodiscard]] bool ok() const noexcept { return violations.empty(); }
};

/// Checks a solution's witness against the instance from scratch.
VerificationReport verify_solution(const Instance& instance, const Solution& solution);

std::string to_string(ArrangementKind kind);

}  // namespace scsk
