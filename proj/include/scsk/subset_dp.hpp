#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "scsk/counters.hpp"
#include "scsk/instance.hpp"
#include "scsk/mismatch_tables.hpp"

namespace scsk {

using Mask = std::uint32_t;

/// overlap(w, v): longest proper suffix of s_w equal to a prefix of s_v.
/// The diagonal holds |s_w| and is never read by the subset DP.
class OverlapTable {
 public:
  OverlapTable() = default;

  /// Reads clean overlays off the mistake table: an overlap of t characters
  /// is clean iff the list for (base v, slider w, shift t - 1) is empty.
  static OverlapTable build(const Instance& instance, const MistakeTable& mistakes, PhaseCounters* counters = nullptr);

  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] int operator()(std::size_t w, std::size_t v) const { return values_.at(w * n_ + v); }

 private:
  std::size_t n_ = 0;
  std::vector<int> values_;
};

/// Exact-SCS lengths per subset with a fixed rightmost or leftmost string,
/// chaining adjacent strings by their maximal clean overlap.
///
///   right(mask, j) = min_{p in mask \ {j}} right(mask \ {j}, p) + |s_j| - overlap(p, j)
///   left(mask, j)  = min_{p in mask \ {j}} left(mask \ {j}, p) + |s_j| - overlap(j, p)
///
/// Only entries with j in mask are defined.
class SubsetTable {
 public:
  SubsetTable() = default;

  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] Mask full_mask() const noexcept { return n_ == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n_) - 1); }

  [[nodiscard]] int right(Mask mask, std::size_t j) const { return right_.at(index(mask, j)); }
  [[nodiscard]] int left(Mask mask, std::size_t j) const { return left_.at(index(mask, j)); }

  /// Predecessor of j in some right-optimal order of mask (smallest index on ties);
  /// nullopt for singletons.
  [[nodiscard]] std::optional<std::size_t> right_predecessor(Mask mask, std::size_t j, const Instance& instance,
                                                             const OverlapTable& overlaps) const;
  [[nodiscard]] std::optional<std::size_t> left_successor(Mask mask, std::size_t j, const Instance& instance,
                                                          const OverlapTable& overlaps) const;

  /// Strings of mask in left-to-right order, ending with j.
  [[nodiscard]] std::vector<std::size_t> right_order(Mask mask, std::size_t j, const Instance& instance,
                                                     const OverlapTable& overlaps) const;
  /// Strings of mask in left-to-right order, starting with j.
  [[nodiscard]] std::vector<std::size_t> left_order(Mask mask, std::size_t j, const Instance& instance,
                                                    const OverlapTable& overlaps) const;

 private:
  friend void build_dp_right(SubsetTable&, const Instance&, const OverlapTable&, PhaseCounters*);
  friend void build_dp_left(SubsetTable&, const Instance&, const OverlapTable&, PhaseCounters*);
  friend SubsetTable build_subset_tables(const Instance&, const OverlapTable&, PhaseCounters*);

  [[nodiscard]] std::size_t index(Mask mask, std::size_t j) const;

  std::size_t n_ = 0;
  std::vector<int> right_;
  std::vector<int> left_;
};

void build_dp_right(SubsetTable& table, const Instance& instance, const OverlapTable& overlaps,
                    PhaseCounters* counters = nullptr);
void build_dp_left(SubsetTable& table, const Instance& instance, const OverlapTable& overlaps,
                   PhaseCounters* counters = nullptr);
/// Both directions. Throws InputError if n exceeds the mask width.
SubsetTable build_subset_tables(const Instance& instance, const OverlapTable& overlaps,
                                PhaseCounters* counters = nullptr);

}  // namespace scsk
