#pragma once

#include <cstddef>
#include <vector>

#include "scsk/instance.hpp"

// Brute-force references. Nothing here touches the solver's tables.

namespace scsk::oracle {

struct OracleLimits {
  std::size_t max_n = 4;
  std::size_t max_total_len = 24;
  /// Longest single string accepted.
  std::size_t max_len_cap = 24;
  /// Permutation oracle for the classical problem.
  std::size_t max_scs_n = 6;
};

struct OracleResult {
  int length = 0;
  std::size_t m_index = 0;
  std::vector<int> offsets;
};

/// Tries every superstring length from the longest string upward; for each,
/// every choice of m and every tuple of offsets. A placement is feasible when
/// the exact strings agree wherever they overlap and m disagrees with them in
/// at most k positions. Throws OracleLimitError("oracle limits") beyond limits.
OracleResult brute_force_scsk(const Instance& instance, const OracleLimits& limits = {});

/// Classical SCS length: minimum over permutations of the chain built from
/// maximal suffix/prefix overlaps.
int brute_force_scs(const Instance& instance, const OracleLimits& limits = {});

/// Longest proper suffix of a that is a prefix of b, by direct comparison.
int direct_overlap(const Sequence& a, const Sequence& b);

}  // namespace scsk::oracle
