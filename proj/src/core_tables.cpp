#include "scsk/core_tables.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

namespace scsk {

namespace {

constexpr int kUnset = std::numeric_limits<int>::max();

}  // namespace

bool lr_overlay_clean(const MistakeTable& table, std::size_t l, std::size_t r, int l_len, int r_len, int len) {
  if (len >= l_len + r_len) return true;
  // r's last character lands on position len - 1 of l's coordinate line.
  return table.count(l, r, len - 1) == 0;
}

CorePlacement triple_core(const Instance& instance, const MistakeTable& mistakes, std::size_t l, std::size_t m,
                          std::size_t r, PhaseCounters* counters) {
  const int L = instance.length(l);
  const int M = instance.length(m);
  const int R = instance.length(r);
  const int budget = instance.k();

  PhaseCounters local;
  CorePlacement best{kUnset, 0};
  for (int len = std::max(L, R); len <= L + R + M; ++len) {
    if (!lr_overlay_clean(mistakes, l, r, L, R, len)) continue;
    const int r_start = len - R;
    for (int start = 0; start <= len - M; ++start) {
      ++local.triple_scan;
      const int m_end = start + M - 1;
      int mistakes_here = 0;
      if (m_end < L) {
        ++local.case_inside_left;
        mistakes_here = mistakes.count(l, m, m_end);
      } else if (start >= r_start) {
        ++local.case_inside_right;
        mistakes_here = mistakes.count(r, m, m_end - r_start);
      } else if (len >= L + R) {
        // l and r are disjoint; m may touch either, both, or neither.
        bool contact = false;
        if (start < L) {
          mistakes_here += mistakes.count(l, m, m_end);
          contact = true;
        }
        if (m_end - r_start >= 0) {
          mistakes_here += mistakes.count(r, m, m_end - r_start);
          contact = true;
        }
        ++(contact ? local.case_apart_contact : local.case_apart_no_contact);
      } else {
        // l and r overlap and m crosses both: drop the r-mistakes that fall in
        // the l/r overlap, they were already counted against l.
        ++local.case_three_way;
        const int shared = L + R - len;
        const int r_shift = m_end - r_start;
        mistakes_here = mistakes.count(l, m, m_end) + mistakes.count(r, m, r_shift) -
                        mistakes.count_up_to(r, m, r_shift, shared - 1);
      }
      if (mistakes_here <= budget && len < best.len) best = {len, start};
    }
  }
  assert(best.len != kUnset);
  if (counters) *counters += local;
  return best;
}

CorePlacement left_pair_core(const Instance& instance, const MistakeTable& mistakes, std::size_t l, std::size_t m,
                             PhaseCounters* counters) {
  const int L = instance.length(l);
  const int M = instance.length(m);
  std::uint64_t scanned = 0;
  CorePlacement best{kUnset, 0};
  for (int len = std::max(L, M); len <= L + M; ++len) {
    for (int start = 0; start <= len - M; ++start) {
      ++scanned;
      if (mistakes.count(l, m, start + M - 1) <= instance.k() && len < best.len) best = {len, start};
    }
  }
  if (counters) counters->pair_scan += scanned;
  return best;
}

CorePlacement right_pair_core(const Instance& instance, const MistakeTable& mistakes, std::size_t m, std::size_t r,
                              PhaseCounters* counters) {
  const int M = instance.length(m);
  const int R = instance.length(r);
  std::uint64_t scanned = 0;
  CorePlacement best{kUnset, 0};
  for (int len = std::max(R, M); len <= R + M; ++len) {
    for (int start = 0; start <= len - M; ++start) {
      ++scanned;
      const int r_shift = start + M - 1 - (len - R);
      const int here = r_shift >= 0 ? mistakes.count(r, m, r_shift) : 0;
      if (here <= instance.k() && len < best.len) best = {len, start};
    }
  }
  if (counters) counters->pair_scan += scanned;
  return best;
}

std::size_t CoreTable::triple_index(std::size_t l, std::size_t m, std::size_t r) const {
  if (l >= n_ || m >= n_ || r >= n_ || l == m || m == r || l == r) throw std::invalid_argument("bad core triple");
  return (l * n_ + m) * n_ + r;
}

std::size_t CoreTable::pair_index(std::size_t a, std::size_t b) const {
  if (a >= n_ || b >= n_ || a == b) throw std::invalid_argument("bad core pair");
  return a * n_ + b;
}

CoreTable build_triple_cores(const Instance& instance, const MistakeTable& mistakes, PhaseCounters* counters) {
  CoreTable t;
  const std::size_t n = instance.n();
  t.n_ = n;
  t.triple_.assign(n * n * n, CorePlacement{kUnset, 0});
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t r = 0; r < n; ++r) {
        if (l == m || m == r || l == r) continue;
        t.triple_[(l * n + m) * n + r] = triple_core(instance, mistakes, l, m, r, counters);
      }
  return t;
}

void build_pair_cores(CoreTable& table, const Instance& instance, const MistakeTable& mistakes,
                      PhaseCounters* counters) {
  const std::size_t n = instance.n();
  table.n_ = n;
  table.left_.assign(n * n, CorePlacement{kUnset, 0});
  table.right_.assign(n * n, CorePlacement{kUnset, 0});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      table.left_[a * n + b] = left_pair_core(instance, mistakes, a, b, counters);
      table.right_[a * n + b] = right_pair_core(instance, mistakes, a, b, counters);
    }
}

CoreTable CoreTable::build(const Instance& instance, const MistakeTable& mistakes, PhaseCounters* counters) {
  CoreTable t = build_triple_cores(instance, mistakes, counters);
  build_pair_cores(t, instance, mistakes, counters);
  return t;
}

}  // namespace scsk
