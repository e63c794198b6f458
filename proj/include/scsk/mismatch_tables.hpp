#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "scsk/counters.hpp"
#include "scsk/instance.hpp"

namespace scsk {

/// Sorted mismatch positions for every ordered pair (base i, slider j), i != j,
/// and every shift k in [0, |s_i| + |s_j| - 1].
///
/// Shift k places the last character of the slider at position k of the
/// base's coordinate line, so slider character t sits at base position
/// k - |s_j| + 1 + t. Positions are reported in base coordinates; shifts with
/// no overlap hold empty lists.
class MistakeTable {
 public:
  MistakeTable() = default;

  /// Direct enumeration over pairs, shifts and slider characters.
  static MistakeTable build(const Instance& instance, PhaseCounters* counters = nullptr);

  [[nodiscard]] std::size_t n() const noexcept { return n_; }

  /// Largest valid shift for (base, slider): |s_base| + |s_slider| - 1.
  [[nodiscard]] int max_shift(std::size_t base, std::size_t slider) const;

  /// Throws std::out_of_range("shift out of range") outside [0, max_shift].
  [[nodiscard]] std::span<const int> positions(std::size_t base, std::size_t slider, int shift) const;

  [[nodiscard]] int count(std::size_t base, std::size_t slider, int shift) const {
    return static_cast<int>(positions(base, slider, shift).size());
  }

  /// Number of stored positions <= bound (binary search).
  [[nodiscard]] int count_up_to(std::size_t base, std::size_t slider, int shift, int bound) const;

 private:
  [[nodiscard]] std::size_t list_index(std::size_t base, std::size_t slider, int shift) const;

  std::size_t n_ = 0;
  std::vector<int> lengths_;
  std::vector<std::size_t> pair_first_;  // first list index of each ordered pair
  std::vector<std::size_t> list_begin_;  // CSR offsets into positions_
  std::vector<int> positions_;
};

inline int mismatch_count(const MistakeTable& table, std::size_t i, std::size_t j, int k) {
  return table.count(i, j, k);
}

inline int mismatches_up_to(const MistakeTable& table, std::size_t i, std::size_t j, int k, int bound) {
  return table.count_up_to(i, j, k, bound);
}

}  // namespace scsk
