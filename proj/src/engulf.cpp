#include "scsk/engulf.hpp"

#include <algorithm>
#include <limits>

namespace scsk {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();
constexpr std::int64_t kNoLeft = -1;

struct Terminal {
  int length = kInf;
  std::size_t state = 0;
  std::optional<std::size_t> right;  // index into `others`
  int right_start = 0;
};

}  // namespace

std::optional<EngulfResult> best_engulf(const Instance& instance, const MistakeTable& mistakes,
                                        const SubsetTable& subsets, std::size_t m, bool want_layout,
                                        PhaseCounters* counters, std::size_t max_states) {
  const std::size_t n = instance.n();
  const int M = instance.length(m);
  const int budget = std::min(instance.k(), M);
  if (budget == 0 || M < 3) return std::nullopt;

  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < n; ++i)
    if (i != m) others.push_back(i);
  const std::size_t q = others.size();

  std::vector<std::size_t> inner;                    // slots of strings short enough to be engulfed
  std::vector<int> inner_pos(q, -1);                 // slot -> position in `inner`
  for (std::size_t s = 0; s < q; ++s) {
    if (instance.length(others[s]) <= M - 2) {
      inner_pos[s] = static_cast<int>(inner.size());
      inner.push_back(s);
    }
  }
  if (inner.empty()) return std::nullopt;

  const std::size_t masks = std::size_t{1} << q;
  const std::size_t ends = static_cast<std::size_t>(M - 1);  // engulfed ends lie in [0, M-2]
  const std::size_t uses = static_cast<std::size_t>(budget) + 1;
  const std::size_t per_mask = inner.size() * ends * uses;
  if (per_mask != 0 && masks > max_states / per_mask) throw InputError("instance too large for the engulf pass");

  std::vector<int> prefix(masks * per_mask, kInf);
  std::vector<std::int64_t> parent;
  if (want_layout) parent.assign(prefix.size(), kNoLeft);

  auto state_index = [&](std::size_t cmask, std::size_t jpos, int e, int u) {
    return ((cmask * inner.size() + jpos) * ends + static_cast<std::size_t>(e)) * uses + static_cast<std::size_t>(u);
  };
  auto to_mask = [&](std::size_t cmask) {
    Mask out = 0;
    for (std::size_t b = 0; b < q; ++b)
      if ((cmask >> b) & 1U) out |= Mask{1} << others[b];
    return out;
  };
  const std::size_t all_others = masks - 1;
  const int source_stride = instance.c() + 1;

  std::uint64_t steps = 0;
  Terminal best;

  // Place the next engulfed string after a chain whose last exact string
  // (absent when `last` is nullopt) spans [last_start, last_end].
  auto extend = [&](std::size_t cmask, std::optional<std::size_t> last, int last_start, int last_end, int used,
                    int before, std::int64_t link) {
    for (std::size_t jpos = 0; jpos < inner.size(); ++jpos) {
      const std::size_t slot = inner[jpos];
      if ((cmask >> slot) & 1U) continue;
      const std::size_t x = others[slot];
      const int X = instance.length(x);
      const int first = last ? std::max(1, last_start + 1) : 1;
      for (int sx = first; sx + X - 1 <= M - 2; ++sx) {
        ++steps;
        const int ex = sx + X - 1;
        if (last) {
          if (ex <= last_end) continue;
          if (sx <= last_end && mistakes.count(*last, x, ex - last_start) != 0) continue;
        }
        const int lo = last ? std::max(sx, last_end + 1) : sx;
        const int fresh = mistakes.count(m, x, ex) - mistakes.count_up_to(m, x, ex, lo - 1);
        const int u = used + fresh;
        if (u > budget) continue;
        const std::size_t idx = state_index(cmask | (std::size_t{1} << slot), jpos, ex, u);
        if (before < prefix[idx]) {
          prefix[idx] = before;
          if (want_layout) parent[idx] = link;
        }
      }
    }
  };

  for (std::size_t cmask = 0; cmask < masks; ++cmask) {
    // Sources: nothing to the left of m, or an exact string ending inside m's span.
    if (cmask == 0) extend(0, std::nullopt, 0, -1, 0, 0, kNoLeft);
    for (std::size_t slot = 0; slot < q; ++slot) {
      if (!((cmask >> slot) & 1U)) continue;
      const std::size_t l = others[slot];
      const int L = instance.length(l);
      const int chain = subsets.right(to_mask(cmask), l);
      for (int a = std::max(0, L - M + 1); a <= L; ++a) {
        const int used = mistakes.count(l, m, a + M - 1);
        if (used > budget) continue;
        const std::int64_t link = -2 - static_cast<std::int64_t>(slot * source_stride + a);
        extend(cmask, l, -a, L - 1 - a, used, chain - L + a, link);
      }
    }

    // Engulfed states: keep engulfing, or close the arrangement.
    for (std::size_t jpos = 0; jpos < inner.size(); ++jpos) {
      const std::size_t jslot = inner[jpos];
      if (!((cmask >> jslot) & 1U)) continue;
      const std::size_t j = others[jslot];
      const int J = instance.length(j);
      for (int e = J - 1; e <= M - 2; ++e) {
        for (int u = 1; u <= budget; ++u) {
          const std::size_t idx = state_index(cmask, jpos, e, u);
          const int before = prefix[idx];
          if (before == kInf) continue;
          const int j_start = e - J + 1;
          extend(cmask, j, j_start, e, u, before, static_cast<std::int64_t>(idx));

          if (cmask == all_others) {
            if (before + M < best.length) best = {before + M, idx, std::nullopt, 0};
            continue;
          }
          const Mask remaining = to_mask(all_others ^ cmask);
          for (std::size_t rslot = 0; rslot < q; ++rslot) {
            if ((cmask >> rslot) & 1U) continue;
            const std::size_t r = others[rslot];
            const int R = instance.length(r);
            const int tail = subsets.left(remaining, r) - R;
            for (int sr = std::max({j_start + 1, 1, M - R}); sr <= M; ++sr) {
              ++steps;
              const int r_end = sr + R - 1;
              if (sr <= e && mistakes.count(j, r, r_end - j_start) != 0) continue;
              const int lo = std::max(sr, e + 1);
              const int fresh = mistakes.count(m, r, r_end) - mistakes.count_up_to(m, r, r_end, lo - 1);
              if (u + fresh > budget) continue;
              const int total = before + M + (r_end - (M - 1)) + tail;
              if (total < best.length) best = {total, idx, rslot, sr};
            }
          }
        }
      }
    }
  }
  if (counters) counters->engulf += steps;
  if (best.length == kInf) return std::nullopt;

  EngulfResult result{best.length, std::nullopt};
  if (!want_layout) return result;

  EngulfLayout layout;
  const std::size_t final_cmask = best.state / per_mask;
  if (best.right) {
    layout.right = others[*best.right];
    layout.right_start = best.right_start;
    layout.right_set = to_mask(all_others ^ final_cmask);
  }
  std::size_t idx = best.state;
  while (true) {
    const std::size_t cmask = idx / per_mask;
    const std::size_t jpos = (idx / (ends * uses)) % inner.size();
    const int e = static_cast<int>((idx / uses) % ends);
    const std::size_t x = others[inner[jpos]];
    layout.engulfed.emplace_back(x, e - instance.length(x) + 1);
    const std::int64_t link = parent[idx];
    if (link >= 0) {
      idx = static_cast<std::size_t>(link);
      continue;
    }
    if (link != kNoLeft) {
      const auto code = static_cast<std::size_t>(-2 - link);
      const std::size_t slot = code / static_cast<std::size_t>(source_stride);
      const int a = static_cast<int>(code % static_cast<std::size_t>(source_stride));
      layout.left = others[slot];
      layout.left_start = -a;
      layout.left_set = to_mask(cmask ^ (std::size_t{1} << inner[jpos]));
    }
    break;
  }
  std::reverse(layout.engulfed.begin(), layout.engulfed.end());
  result.layout = std::move(layout);
  return result;
}

}  // namespace scsk
