#include "scsk/mismatch_tables.hpp"

#include <algorithm>
#include <stdexcept>

namespace scsk {

MistakeTable MistakeTable::build(const Instance& instance, PhaseCounters* counters) {
  MistakeTable t;
  const std::size_t n = instance.n();
  t.n_ = n;
  t.lengths_.resize(n);
  for (std::size_t i = 0; i < n; ++i) t.lengths_[i] = instance.length(i);

  t.pair_first_.assign(n * n, 0);
  std::size_t lists = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      t.pair_first_[i * n + j] = lists;
      if (i != j) lists += static_cast<std::size_t>(t.lengths_[i] + t.lengths_[j]);
    }
  }
  t.list_begin_.reserve(lists + 1);

  std::uint64_t visits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Sequence& base = instance[i];
      const Sequence& slider = instance[j];
      const int base_len = static_cast<int>(base.size());
      const int slider_len = static_cast<int>(slider.size());
      for (int shift = 0; shift < base_len + slider_len; ++shift) {
        t.list_begin_.push_back(t.positions_.size());
        for (int ch = 0; ch < slider_len; ++ch) {
          ++visits;
          const int x = shift - slider_len + 1 + ch;
          if (x >= 0 && x < base_len && slider[ch] != base[x]) t.positions_.push_back(x);
        }
      }
    }
  }
  t.list_begin_.push_back(t.positions_.size());
  if (counters) counters->mistake_tables += visits;
  return t;
}

int MistakeTable::max_shift(std::size_t base, std::size_t slider) const {
  return lengths_.at(base) + lengths_.at(slider) - 1;
}

std::size_t MistakeTable::list_index(std::size_t base, std::size_t slider, int shift) const {
  if (base >= n_ || slider >= n_ || base == slider) throw std::invalid_argument("pair out of range");
  if (shift < 0 || shift > max_shift(base, slider)) throw std::out_of_range("shift out of range");
  return pair_first_[base * n_ + slider] + static_cast<std::size_t>(shift);
}

std::span<const int> MistakeTable::positions(std::size_t base, std::size_t slider, int shift) const {
  const std::size_t idx = list_index(base, slider, shift);
  return std::span<const int>(positions_).subspan(list_begin_[idx], list_begin_[idx + 1] - list_begin_[idx]);
}

int MistakeTable::count_up_to(std::size_t base, std::size_t slider, int shift, int bound) const {
  auto list = positions(base, slider, shift);
  return static_cast<int>(std::upper_bound(list.begin(), list.end(), bound) - list.begin());
}

}  // namespace scsk
