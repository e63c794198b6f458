#include <gtest/gtest.h>

#include <random>

#include "scsk/mismatch_tables.hpp"
#include "support/reference.hpp"

namespace scsk {
namespace {

using testing::make;

std::vector<int> as_vector(std::span<const int> s) { return {s.begin(), s.end()}; }

TEST(MistakeTable, IdenticalAlignmentHasNoMistakes) {
  // Two equal strings are not a valid instance, but the table does not care.
  const auto table = MistakeTable::build(Instance(std::vector<Sequence>{testing::u("ab"), testing::u("ab")}, 0));
  EXPECT_TRUE(table.positions(0, 1, 1).empty());
  EXPECT_EQ(mismatch_count(table, 0, 1, 1), 0);
}

TEST(MistakeTable, ReversedPairFullyMismatched) {
  const auto table = MistakeTable::build(make({"ab", "ba"}));
  EXPECT_EQ(as_vector(table.positions(0, 1, 1)), (std::vector<int>{0, 1}));
  EXPECT_EQ(mismatch_count(table, 0, 1, 1), 2);
}

TEST(MistakeTable, NoOverlapPastTheBase) {
  const auto table = MistakeTable::build(make({"abc", "xy"}));
  EXPECT_EQ(table.max_shift(0, 1), 4);
  EXPECT_TRUE(table.positions(0, 1, 4).empty());
  EXPECT_EQ(mismatch_count(table, 0, 1, 4), 0);
}

TEST(MistakeTable, ShiftOutOfRange) {
  const auto table = MistakeTable::build(make({"ab", "ba"}));
  EXPECT_THROW((void)table.count(0, 1, 4), std::out_of_range);
  EXPECT_THROW((void)table.count(0, 1, -1), std::out_of_range);
  EXPECT_THROW((void)mismatches_up_to(table, 0, 1, 9, 0), std::out_of_range);
  try {
    (void)table.positions(1, 0, 7);
  } catch (const std::out_of_range& e) {
    EXPECT_STREQ(e.what(), "shift out of range");
  }
}

TEST(MistakeTable, CountUpTo) {
  const auto table = MistakeTable::build(make({"ab", "ba"}));
  EXPECT_EQ(mismatches_up_to(table, 0, 1, 1, 0), 1);
  EXPECT_EQ(mismatches_up_to(table, 0, 1, 1, -1), 0);
  EXPECT_EQ(mismatches_up_to(table, 0, 1, 1, 5), 2);
}

// Every list equals a direct character scan, is strictly increasing, stays in
// the overlap window, and the per-pair totals agree in both directions.
TEST(MistakeTableProperty, MatchesDirectScan) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 120; ++trial) {
    const Instance inst = testing::random_instance(rng, 2, 5, 6, 3, 0);
    const auto table = MistakeTable::build(inst);
    for (std::size_t i = 0; i < inst.n(); ++i) {
      for (std::size_t j = 0; j < inst.n(); ++j) {
        if (i == j) continue;
        const int si = inst.length(i), sj = inst.length(j);
        int forward = 0, backward = 0;
        for (int k = 0; k <= table.max_shift(i, j); ++k) {
          const auto list = as_vector(table.positions(i, j, k));
          ASSERT_EQ(list, testing::direct_mismatches(inst[i], inst[j], k));
          for (std::size_t p = 1; p < list.size(); ++p) ASSERT_LT(list[p - 1], list[p]);
          for (int x : list) {
            ASSERT_GE(x, std::max(0, k - sj + 1));
            ASSERT_LE(x, std::min(si - 1, k));
          }
          ASSERT_EQ(mismatches_up_to(table, i, j, k, si + sj), mismatch_count(table, i, j, k));
          forward += mismatch_count(table, i, j, k);
          backward += mismatch_count(table, j, i, k);
        }
        EXPECT_EQ(forward, backward);
      }
    }
  }
}

TEST(MistakeTable, CounterWithinBound) {
  PhaseCounters counters;
  const Instance inst = make({"ab", "bc", "ca"});
  (void)MistakeTable::build(inst, &counters);
  // 6 ordered pairs * 4 shifts * 2 slider characters.
  EXPECT_EQ(counters.mistake_tables, 48U);
  EXPECT_LE(counters.mistake_tables, 144U);
}

}  // namespace
}  // namespace scsk
