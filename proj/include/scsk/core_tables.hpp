#pragma once

#include <cstddef>
#include <vector>

#include "scsk/counters.hpp"
#include "scsk/instance.hpp"
#include "scsk/mismatch_tables.hpp"

namespace scsk {

/// Where the mistake-bearing string sits inside a minimal core.
/// `len` is the core length, `start` the offset of m from the core's left edge.
struct CorePlacement {
  int len = 0;
  int start = 0;
  friend bool operator==(const CorePlacement&, const CorePlacement&) = default;
};

/// True iff l at [0, |l|-1] and r at [len-|r|, len-1] agree on their overlap.
/// Any len >= |l| + |r| is clean. Requires max(|l|, |r|) <= len.
bool lr_overlay_clean(const MistakeTable& table, std::size_t l, std::size_t r, int l_len, int r_len, int len);

/// Minimal merged lengths with one mistake-bearing string m.
///
///   lmr(l, m, r)     l exact at the left edge, r exact at the right edge,
///                    m anywhere in between with at most k mismatches
///                    against the union of l and r.
///   pair_left(l, m)  l exact at the left edge, no right anchor.
///   pair_right(m, r) r exact at the right edge, no left anchor.
///
/// Every entry is finite once built. Witness placements are the first
/// feasible (len, start) in ascending scan order.
class CoreTable {
 public:
  CoreTable() = default;

  static CoreTable build(const Instance& instance, const MistakeTable& mistakes, PhaseCounters* counters = nullptr);

  [[nodiscard]] std::size_t n() const noexcept { return n_; }

  [[nodiscard]] int lmr(std::size_t l, std::size_t m, std::size_t r) const { return triple_.at(triple_index(l, m, r)).len; }
  [[nodiscard]] CorePlacement lmr_placement(std::size_t l, std::size_t m, std::size_t r) const {
    return triple_.at(triple_index(l, m, r));
  }
  [[nodiscard]] int pair_left(std::size_t l, std::size_t m) const { return left_.at(pair_index(l, m)).len; }
  [[nodiscard]] CorePlacement pair_left_placement(std::size_t l, std::size_t m) const { return left_.at(pair_index(l, m)); }
  [[nodiscard]] int pair_right(std::size_t m, std::size_t r) const { return right_.at(pair_index(m, r)).len; }
  [[nodiscard]] CorePlacement pair_right_placement(std::size_t m, std::size_t r) const {
    return right_.at(pair_index(m, r));
  }

 private:
  friend CoreTable build_triple_cores(const Instance&, const MistakeTable&, PhaseCounters*);
  friend void build_pair_cores(CoreTable&, const Instance&, const MistakeTable&, PhaseCounters*);

  [[nodiscard]] std::size_t triple_index(std::size_t l, std::size_t m, std::size_t r) const;
  [[nodiscard]] std::size_t pair_index(std::size_t a, std::size_t b) const;

  std::size_t n_ = 0;
  std::vector<CorePlacement> triple_;
  std::vector<CorePlacement> left_;
  std::vector<CorePlacement> right_;
};

/// Minimal core for one ordered triple, scanning every (len, start) and
/// classifying each placement by how m meets l and r.
CorePlacement triple_core(const Instance& instance, const MistakeTable& mistakes, std::size_t l, std::size_t m,
                          std::size_t r, PhaseCounters* counters = nullptr);

CorePlacement left_pair_core(const Instance& instance, const MistakeTable& mistakes, std::size_t l, std::size_t m,
                             PhaseCounters* counters = nullptr);
CorePlacement right_pair_core(const Instance& instance, const MistakeTable& mistakes, std::size_t m, std::size_t r,
                              PhaseCounters* counters = nullptr);

/// Fills the triple part; pair entries are left empty.
CoreTable build_triple_cores(const Instance& instance, const MistakeTable& mistakes, PhaseCounters* counters = nullptr);
/// Fills the pair parts of an existing table.
void build_pair_cores(CoreTable& table, const Instance& instance, const MistakeTable& mistakes,
                      PhaseCounters* counters = nullptr);

}  // namespace scsk
