#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "scsk/counters.hpp"
#include "scsk/instance.hpp"
#include "scsk/mismatch_tables.hpp"
#include "scsk/subset_dp.hpp"

namespace scsk {

/// Exact strings around the mistake-bearing string m in an engulfing
/// arrangement. Starts are relative to m's first character.
struct EngulfLayout {
  std::optional<std::size_t> left;  // last exact string starting at or before m
  int left_start = 0;
  Mask left_set = 0;  // strings chained to the left, including `left`
  std::vector<std::pair<std::size_t, int>> engulfed;  // (string, start), left to right
  std::optional<std::size_t> right;  // first exact string reaching m's last character
  int right_start = 0;
  Mask right_set = 0;  // strings chained to the right, including `right`
};

struct EngulfResult {
  int length = 0;
  std::optional<EngulfLayout> layout;
};

/// Arrangements the triple/edge composition cannot express: m strictly
/// contains the span of one or more exact strings (each with at least one
/// mismatch, since none may be a substring of m).
///
/// Left of m sits a chain ending in `left` (the last exact string starting at
/// or before m), inside m a chain of engulfed strings, right of m a chain
/// starting with `right`. Adjacent exact strings overlap cleanly by any
/// amount; positions covered only by m are free. The search is a DP over
/// (placed set, last engulfed string, its end inside m, mistakes used)
/// holding the least prefix length before m.
///
/// Returns nullopt when no engulfing arrangement exists (k = 0 or no string
/// at least two characters shorter than m). Throws InputError when the state
/// space exceeds `max_states`.
std::optional<EngulfResult> best_engulf(const Instance& instance, const MistakeTable& mistakes,
                                        const SubsetTable& subsets, std::size_t m, bool want_layout,
                                        PhaseCounters* counters = nullptr, std::size_t max_states = std::size_t{1} << 25);

}  // namespace scsk
