#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace scsk {

/// Inner-loop iteration counts per solver phase.
struct PhaseCounters {
  std::uint64_t mistake_tables = 0;  // (shift, slider position) visits over ordered pairs
  std::uint64_t triple_scan = 0;     // (len, start) placements examined for ordered triples
  std::uint64_t pair_scan = 0;       // (len, start) placements examined for edge pairs
  std::uint64_t overlap = 0;         // candidate overlap lengths tested
  std::uint64_t dp_right = 0;        // (mask, right, predecessor) transitions
  std::uint64_t dp_left = 0;
  std::uint64_t composition = 0;     // (triple, bipartition) and edge-pair combinations
  std::uint64_t engulf = 0;          // engulf-pass transitions

  // Case classification of triple_scan; the five buckets sum to triple_scan.
  std::uint64_t case_inside_left = 0;
  std::uint64_t case_inside_right = 0;
  std::uint64_t case_apart_contact = 0;
  std::uint64_t case_apart_no_contact = 0;
  std::uint64_t case_three_way = 0;

  PhaseCounters& operator+=(const PhaseCounters& o);
};

struct CounterBound {
  std::string_view phase;
  std::uint64_t count;
  std::uint64_t bound;
  [[nodiscard]] bool within() const noexcept { return count <= bound; }
};

/// Closed-form per-phase bounds for an instance with n strings, longest
/// length c and budget k:
///   mistake_tables  n^2 (2c)^2      triple_scan  n^3 (3c)^2
///   pair_scan       2 n^2 (c+1)^2   overlap      n^2 c
///   dp_right/left   n^2 2^n         composition  n^3 2^n
///   engulf          2 n^3 2^n c^2 (k+1)
/// Saturates at UINT64_MAX.
std::array<CounterBound, 8> counter_bounds(const PhaseCounters& counters, std::uint64_t n, std::uint64_t c,
                                           std::uint64_t k);

}  // namespace scsk
