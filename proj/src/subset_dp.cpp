#include "scsk/subset_dp.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

namespace scsk {

namespace {

constexpr int kUnset = std::numeric_limits<int>::max();

bool has(Mask mask, std::size_t j) { return (mask >> j) & 1U; }

}  // namespace

OverlapTable OverlapTable::build(const Instance& instance, const MistakeTable& mistakes, PhaseCounters* counters) {
  OverlapTable t;
  const std::size_t n = instance.n();
  t.n_ = n;
  t.values_.assign(n * n, 0);
  std::uint64_t tested = 0;
  for (std::size_t w = 0; w < n; ++w) {
    for (std::size_t v = 0; v < n; ++v) {
      if (w == v) {
        t.values_[w * n + v] = instance.length(v);
        continue;
      }
      const int limit = std::min(instance.length(w), instance.length(v));
      for (int o = 1; o < limit; ++o) {
        ++tested;
        if (mistakes.count(v, w, o - 1) == 0) t.values_[w * n + v] = o;
      }
    }
  }
  if (counters) counters->overlap += tested;
  return t;
}

std::size_t SubsetTable::index(Mask mask, std::size_t j) const {
  if (j >= n_ || !has(mask, j) || (mask & ~full_mask()) != 0) throw std::out_of_range("subset entry not defined");
  return static_cast<std::size_t>(mask) * n_ + j;
}

void build_dp_right(SubsetTable& table, const Instance& instance, const OverlapTable& overlaps,
                    PhaseCounters* counters) {
  const std::size_t n = instance.n();
  const std::size_t masks = std::size_t{1} << n;
  table.n_ = n;
  table.right_.assign(masks * n, kUnset);
  std::uint64_t transitions = 0;
  for (Mask mask = 1; mask < masks; ++mask) {
    for (std::size_t right = 0; right < n; ++right) {
      if (!has(mask, right)) continue;
      const Mask rest = mask ^ (Mask{1} << right);
      int& cell = table.right_[mask * n + right];
      if (rest == 0) {
        cell = instance.length(right);
        continue;
      }
      for (std::size_t prev = 0; prev < n; ++prev) {
        if (!has(rest, prev)) continue;
        ++transitions;
        cell = std::min(cell, table.right_[rest * n + prev] + instance.length(right) - overlaps(prev, right));
      }
      assert(cell != kUnset);
    }
  }
  if (counters) counters->dp_right += transitions;
}

void build_dp_left(SubsetTable& table, const Instance& instance, const OverlapTable& overlaps,
                   PhaseCounters* counters) {
  const std::size_t n = instance.n();
  const std::size_t masks = std::size_t{1} << n;
  table.n_ = n;
  table.left_.assign(masks * n, kUnset);
  std::uint64_t transitions = 0;
  for (Mask mask = 1; mask < masks; ++mask) {
    for (std::size_t left = 0; left < n; ++left) {
      if (!has(mask, left)) continue;
      const Mask rest = mask ^ (Mask{1} << left);
      int& cell = table.left_[mask * n + left];
      if (rest == 0) {
        cell = instance.length(left);
        continue;
      }
      for (std::size_t next = 0; next < n; ++next) {
        if (!has(rest, next)) continue;
        ++transitions;
        cell = std::min(cell, table.left_[rest * n + next] + instance.length(left) - overlaps(left, next));
      }
      assert(cell != kUnset);
    }
  }
  if (counters) counters->dp_left += transitions;
}

SubsetTable build_subset_tables(const Instance& instance, const OverlapTable& overlaps, PhaseCounters* counters) {
  if (instance.n() >= 31) throw InputError("too many strings for subset tables");
  SubsetTable t;
  build_dp_right(t, instance, overlaps, counters);
  build_dp_left(t, instance, overlaps, counters);
  return t;
}

std::optional<std::size_t> SubsetTable::right_predecessor(Mask mask, std::size_t j, const Instance& instance,
                                                          const OverlapTable& overlaps) const {
  const Mask rest = mask ^ (Mask{1} << j);
  if (rest == 0) return std::nullopt;
  const int target = right(mask, j);
  for (std::size_t p = 0; p < n_; ++p) {
    if (has(rest, p) && right(rest, p) + instance.length(j) - overlaps(p, j) == target) return p;
  }
  throw std::logic_error("subset table inconsistent");
}

std::optional<std::size_t> SubsetTable::left_successor(Mask mask, std::size_t j, const Instance& instance,
                                                       const OverlapTable& overlaps) const {
  const Mask rest = mask ^ (Mask{1} << j);
  if (rest == 0) return std::nullopt;
  const int target = left(mask, j);
  for (std::size_t p = 0; p < n_; ++p) {
    if (has(rest, p) && left(rest, p) + instance.length(j) - overlaps(j, p) == target) return p;
  }
  throw std::logic_error("subset table inconsistent");
}

std::vector<std::size_t> SubsetTable::right_order(Mask mask, std::size_t j, const Instance& instance,
                                                  const OverlapTable& overlaps) const {
  std::vector<std::size_t> order{j};
  while (auto p = right_predecessor(mask, j, instance, overlaps)) {
    mask ^= Mask{1} << j;
    j = *p;
    order.push_back(j);
  }
  std::reverse(order.begin(), order.end());
  return order;
}

std::vector<std::size_t> SubsetTable::left_order(Mask mask, std::size_t j, const Instance& instance,
                                                 const OverlapTable& overlaps) const {
  std::vector<std::size_t> order{j};
  while (auto p = left_successor(mask, j, instance, overlaps)) {
    mask ^= Mask{1} << j;
    j = *p;
    order.push_back(j);
  }
  return order;
}

}  // namespace scsk
