#include "scsk/counters.hpp"

#include <limits>

namespace scsk {

PhaseCounters& PhaseCounters::operator+=(const PhaseCounters& o) {
  mistake_tables += o.mistake_tables;
  triple_scan += o.triple_scan;
  pair_scan += o.pair_scan;
  overlap += o.overlap;
  dp_right += o.dp_right;
  dp_left += o.dp_left;
  composition += o.composition;
  engulf += o.engulf;
  case_inside_left += o.case_inside_left;
  case_inside_right += o.case_inside_right;
  case_apart_contact += o.case_apart_contact;
  case_apart_no_contact += o.case_apart_no_contact;
  case_three_way += o.case_three_way;
  return *this;
}

namespace {

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kMax / a) return kMax;
  return a * b;
}

std::uint64_t pow2(std::uint64_t n) { return n >= 64 ? kMax : (std::uint64_t{1} << n); }

}  // namespace

std::array<CounterBound, 8> counter_bounds(const PhaseCounters& counters, std::uint64_t n, std::uint64_t c,
                                           std::uint64_t k) {
  const auto n2 = mul(n, n);
  const auto n3 = mul(n2, n);
  return {{
      {"mistake_tables", counters.mistake_tables, mul(n2, mul(2 * c, 2 * c))},
      {"triple_scan", counters.triple_scan, mul(n3, mul(3 * c, 3 * c))},
      {"pair_scan", counters.pair_scan, mul(2 * n2, mul(c + 1, c + 1))},
      {"overlap", counters.overlap, mul(n2, c)},
      {"dp_right", counters.dp_right, mul(n2, pow2(n))},
      {"dp_left", counters.dp_left, mul(n2, pow2(n))},
      {"composition", counters.composition, mul(n3, pow2(n))},
      {"engulf", counters.engulf, mul(2, mul(mul(n3, pow2(n)), mul(mul(c, c), k + 1)))},
  }};
}

}  // namespace scsk
