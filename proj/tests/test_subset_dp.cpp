#include <gtest/gtest.h>

#include <random>

#include "scsk/oracle.hpp"
#include "scsk/subset_dp.hpp"
#include "support/reference.hpp"

namespace scsk {
namespace {

using testing::make;

struct Built {
  OverlapTable overlaps;
  SubsetTable subsets;
};

Built build(const Instance& inst) {
  const auto mistakes = MistakeTable::build(inst);
  auto overlaps = OverlapTable::build(inst, mistakes);
  auto subsets = build_subset_tables(inst, overlaps);
  return {std::move(overlaps), std::move(subsets)};
}

TEST(OverlapTable, Examples) {
  const auto b = build(make({"ab", "ba", "cd"}));
  EXPECT_EQ(b.overlaps(0, 1), 1);
  EXPECT_EQ(b.overlaps(0, 2), 0);
  EXPECT_EQ(b.overlaps(0, 0), 2);
}

TEST(SubsetTable, TwoStrings) {
  const auto b = build(make({"ab", "bc"}));
  EXPECT_EQ(b.subsets.right(0b01, 0), 2);
  EXPECT_EQ(b.subsets.left(0b10, 1), 2);
  EXPECT_EQ(b.subsets.right(0b11, 1), 3);
  EXPECT_EQ(b.subsets.right(0b11, 0), 4);
  EXPECT_EQ(b.subsets.left(0b11, 0), 3);
  EXPECT_EQ(b.subsets.left(0b11, 1), 4);
}

TEST(SubsetTable, UndefinedEntriesThrow) {
  const auto b = build(make({"ab", "bc"}));
  EXPECT_THROW((void)b.subsets.right(0b01, 1), std::out_of_range);
  EXPECT_THROW((void)b.subsets.left(0b100, 0), std::out_of_range);
}

TEST(SubsetTable, Orders) {
  const Instance inst = make({"cd", "ab", "bc"});
  const auto b = build(inst);
  EXPECT_EQ(b.subsets.right_order(0b111, 0, inst, b.overlaps), (std::vector<std::size_t>{1, 2, 0}));
  EXPECT_EQ(b.subsets.left_order(0b111, 1, inst, b.overlaps), (std::vector<std::size_t>{1, 2, 0}));
}

// Mistake-list overlaps equal direct suffix/prefix comparison and respect the
// strict bound implied by the no-substring rule.
TEST(OverlapTableProperty, MatchesDirectComparison) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const Instance inst = testing::random_instance(rng, 2, 6, 6, 2, 0);
    const auto b = build(inst);
    for (std::size_t w = 0; w < inst.n(); ++w)
      for (std::size_t v = 0; v < inst.n(); ++v) {
        if (w == v) continue;
        ASSERT_EQ(b.overlaps(w, v), oracle::direct_overlap(inst[w], inst[v]));
        ASSERT_LT(b.overlaps(w, v), std::min(inst.length(w), inst.length(v)));
      }
  }
}

TEST(SubsetTableProperty, RecurrenceBoundsAndFullMask) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance inst = testing::random_instance(rng, 1, 6, 5, 2 + static_cast<int>(rng() % 2), 0);
    const auto b = build(inst);
    const std::size_t n = inst.n();
    const Mask full = b.subsets.full_mask();
    for (Mask mask = 1; mask <= full; ++mask) {
      int longest = 0, sum = 0;
      for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1U) {
          longest = std::max(longest, inst.length(i));
          sum += inst.length(i);
        }
      for (std::size_t j = 0; j < n; ++j) {
        if (!((mask >> j) & 1U)) continue;
        const int v = b.subsets.right(mask, j);
        ASSERT_GE(v, longest);
        ASSERT_LE(v, sum);
        ASSERT_GE(b.subsets.left(mask, j), longest);
        ASSERT_LE(b.subsets.left(mask, j), sum);
        for (std::size_t p = 0; p < n; ++p) {
          if (p == j || !((mask >> p) & 1U)) continue;
          const Mask without = mask ^ (Mask{1} << j);
          ASSERT_LE(v, b.subsets.right(without, p) + inst.length(j));
        }
      }
    }
    int best = std::numeric_limits<int>::max();
    for (std::size_t j = 0; j < n; ++j) best = std::min(best, b.subsets.right(full, j));
    EXPECT_EQ(best, oracle::brute_force_scs(inst));
  }
}

TEST(SubsetTableProperty, ReversalDuality) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const Instance inst = testing::random_instance(rng, 1, 6, 6, 3, 0);
    const auto forward = build(inst);
    const auto backward = build(inst.reversed());
    for (Mask mask = 1; mask <= forward.subsets.full_mask(); ++mask)
      for (std::size_t j = 0; j < inst.n(); ++j)
        if ((mask >> j) & 1U) ASSERT_EQ(forward.subsets.left(mask, j), backward.subsets.right(mask, j));
  }
}

TEST(SubsetTable, Counters) {
  PhaseCounters counters;
  const Instance inst = make({"ab", "bc", "ca"});
  const auto mistakes = MistakeTable::build(inst);
  const auto overlaps = OverlapTable::build(inst, mistakes, &counters);
  (void)build_subset_tables(inst, overlaps, &counters);
  // Each 2-subset has 2 transitions, the full set 3 * 2.
  EXPECT_EQ(counters.dp_right, 3U * 2U + 6U);
  EXPECT_EQ(counters.dp_left, counters.dp_right);
  EXPECT_LE(counters.dp_right, 9U * 8U);
  EXPECT_EQ(counters.overlap, 6U);
}

}  // namespace
}  // namespace scsk
