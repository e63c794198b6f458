#include "scsk/solver.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>
#include <tuple>

#include "scsk/engulf.hpp"

namespace scsk {

std::string to_string(ArrangementKind kind) {
  switch (kind) {
    case ArrangementKind::single: return "single";
    case ArrangementKind::mistake_first: return "mistake_first";
    case ArrangementKind::mistake_last: return "mistake_last";
    case ArrangementKind::triple: return "triple";
    case ArrangementKind::engulf: return "engulf";
  }
  return "unknown";
}

SolverTables SolverTables::build(const Instance& instance, PhaseCounters* counters) {
  SolverTables t;
  t.mistakes = MistakeTable::build(instance, counters);
  t.cores = CoreTable::build(instance, t.mistakes, counters);
  t.overlaps = OverlapTable::build(instance, t.mistakes, counters);
  t.subsets = build_subset_tables(instance, t.overlaps, counters);
  return t;
}

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

Mask bit(std::size_t i) { return Mask{1} << i; }

struct Candidate {
  int length = kInf;
  Arrangement arrangement;

  [[nodiscard]] auto key(std::size_t n) const {
    const auto& a = arrangement;
    return std::make_tuple(length, a.m, static_cast<int>(a.kind), a.l.value_or(n), a.r.value_or(n), a.left_set);
  }
};

void keep_better(Candidate& best, const Candidate& c, std::size_t n) {
  if (c.length == kInf) return;
  if (best.length == kInf || c.key(n) < best.key(n)) best = c;
}

struct Task {
  ArrangementKind kind;
  std::size_t m;
  std::size_t l;
  std::size_t r;
};

std::vector<Task> make_tasks(std::size_t n, bool engulf_pass) {
  std::vector<Task> tasks;
  if (n == 1) {
    tasks.push_back({ArrangementKind::single, 0, 0, 0});
    return tasks;
  }
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t o = 0; o < n; ++o) {
      if (o == m) continue;
      tasks.push_back({ArrangementKind::mistake_first, m, 0, o});
      tasks.push_back({ArrangementKind::mistake_last, m, o, 0});
    }
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t r = 0; r < n; ++r)
        if (l != m && r != m && l != r) tasks.push_back({ArrangementKind::triple, m, l, r});
    if (engulf_pass) tasks.push_back({ArrangementKind::engulf, m, 0, 0});
  }
  return tasks;
}

Candidate run_task(const Instance& instance, const SolverTables& t, const Task& task, PhaseCounters& counters) {
  const std::size_t n = instance.n();
  const Mask full = t.subsets.full_mask();
  Candidate best;
  switch (task.kind) {
    case ArrangementKind::single:
      best = {instance.length(0), {ArrangementKind::single, 0, std::nullopt, std::nullopt, 0}};
      break;
    case ArrangementKind::mistake_first: {
      ++counters.composition;
      const int len = t.cores.pair_right(task.m, task.r) - instance.length(task.r) +
                      t.subsets.left(full ^ bit(task.m), task.r);
      best = {len, {task.kind, task.m, std::nullopt, task.r, 0}};
      break;
    }
    case ArrangementKind::mistake_last: {
      ++counters.composition;
      const Mask left_set = full ^ bit(task.m) ^ bit(task.l);
      const int len = t.subsets.right(full ^ bit(task.m), task.l) + t.cores.pair_left(task.l, task.m) -
                      instance.length(task.l);
      best = {len, {task.kind, task.m, task.l, std::nullopt, left_set}};
      break;
    }
    case ArrangementKind::triple: {
      const Mask rest = full ^ bit(task.l) ^ bit(task.m) ^ bit(task.r);
      const int core = t.cores.lmr(task.l, task.m, task.r) - instance.length(task.l) - instance.length(task.r);
      // Every submask of rest, from rest itself down to the empty set.
      Mask left_set = rest;
      while (true) {
        ++counters.composition;
        const int len = t.subsets.right(left_set | bit(task.l), task.l) + core +
                        t.subsets.left((rest ^ left_set) | bit(task.r), task.r);
        keep_better(best, {len, {task.kind, task.m, task.l, task.r, left_set}}, n);
        if (left_set == 0) break;
        left_set = (left_set - 1) & rest;
      }
      break;
    }
    case ArrangementKind::engulf: {
      if (auto found = best_engulf(instance, t.mistakes, t.subsets, task.m, false, &counters)) {
        best = {found->length, {task.kind, task.m, std::nullopt, std::nullopt, 0}};
      }
      break;
    }
  }
  return best;
}

// Exact strings are written first; m fills whatever they leave uncovered.
Witness assemble(const Instance& instance, std::size_t m, const std::vector<std::optional<int>>& starts) {
  const std::size_t n = instance.n();
  int lo = std::numeric_limits<int>::max();
  int hi = std::numeric_limits<int>::min();
  for (std::size_t i = 0; i < n; ++i) {
    if (!starts[i]) throw ReconstructionError("reconstruction mismatch: string " + std::to_string(i) + " unplaced");
    lo = std::min(lo, *starts[i]);
    hi = std::max(hi, *starts[i] + instance.length(i));
  }
  Witness w;
  w.offsets.resize(n);
  for (std::size_t i = 0; i < n; ++i) w.offsets[i] = *starts[i] - lo;

  const auto size = static_cast<std::size_t>(hi - lo);
  std::vector<std::optional<Symbol>> cells(size);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == m) continue;
    for (int t = 0; t < instance.length(i); ++t) {
      auto& cell = cells[static_cast<std::size_t>(w.offsets[i] + t)];
      const Symbol ch = instance[i][static_cast<std::size_t>(t)];
      if (cell && *cell != ch) throw ReconstructionError("reconstruction mismatch: exact strings disagree");
      cell = ch;
    }
  }
  for (int t = 0; t < instance.length(m); ++t) {
    auto& cell = cells[static_cast<std::size_t>(w.offsets[m] + t)];
    if (!cell) cell = instance[m][static_cast<std::size_t>(t)];
  }
  w.text.reserve(size);
  for (const auto& cell : cells) w.text.push_back(cell.value_or(instance.fill_symbol()));
  for (int t = 0; t < instance.length(m); ++t) {
    const int pos = w.offsets[m] + t;
    if (w.text[static_cast<std::size_t>(pos)] != instance[m][static_cast<std::size_t>(t)]) w.mismatch_positions.push_back(pos);
  }
  return w;
}

// Chain whose last string is order.back(), placed so that it starts at `anchor_start`.
void place_ending_at(const Instance& instance, const OverlapTable& overlaps, const std::vector<std::size_t>& order,
                     int anchor_start, std::vector<std::optional<int>>& starts) {
  int pos = anchor_start;
  starts[order.back()] = pos;
  for (std::size_t i = order.size() - 1; i-- > 0;) {
    pos -= instance.length(order[i]) - overlaps(order[i], order[i + 1]);
    starts[order[i]] = pos;
  }
}

// Chain whose first string is order.front(), placed so that it starts at `anchor_start`.
void place_starting_at(const Instance& instance, const OverlapTable& overlaps, const std::vector<std::size_t>& order,
                       int anchor_start, std::vector<std::optional<int>>& starts) {
  int pos = anchor_start;
  starts[order.front()] = pos;
  for (std::size_t i = 1; i < order.size(); ++i) {
    pos += instance.length(order[i - 1]) - overlaps(order[i - 1], order[i]);
    starts[order[i]] = pos;
  }
}

}  // namespace

Witness reconstruct(const Instance& instance, const SolverTables& t, const Arrangement& a, int expected_length) {
  const std::size_t n = instance.n();
  const Mask full = n == 0 ? 0 : t.subsets.full_mask();
  std::vector<std::optional<int>> starts(n);
  starts[a.m] = 0;
  switch (a.kind) {
    case ArrangementKind::single:
      break;
    case ArrangementKind::mistake_first: {
      const auto core = t.cores.pair_right_placement(a.m, *a.r);
      starts[a.m] = core.start;
      place_starting_at(instance, t.overlaps, t.subsets.left_order(full ^ bit(a.m), *a.r, instance, t.overlaps),
                        core.len - instance.length(*a.r), starts);
      break;
    }
    case ArrangementKind::mistake_last: {
      const auto core = t.cores.pair_left_placement(*a.l, a.m);
      starts[a.m] = core.start;
      place_ending_at(instance, t.overlaps, t.subsets.right_order(a.left_set | bit(*a.l), *a.l, instance, t.overlaps),
                      0, starts);
      break;
    }
    case ArrangementKind::triple: {
      const auto core = t.cores.lmr_placement(*a.l, a.m, *a.r);
      const Mask right_set = full ^ a.left_set ^ bit(*a.l) ^ bit(a.m);
      starts[a.m] = core.start;
      place_ending_at(instance, t.overlaps, t.subsets.right_order(a.left_set | bit(*a.l), *a.l, instance, t.overlaps),
                      0, starts);
      place_starting_at(instance, t.overlaps, t.subsets.left_order(right_set, *a.r, instance, t.overlaps),
                        core.len - instance.length(*a.r), starts);
      break;
    }
    case ArrangementKind::engulf: {
      auto found = best_engulf(instance, t.mistakes, t.subsets, a.m, true);
      if (!found || !found->layout) throw ReconstructionError("reconstruction mismatch: engulf layout lost");
      const auto& layout = *found->layout;
      if (layout.left) {
        place_ending_at(instance, t.overlaps, t.subsets.right_order(layout.left_set, *layout.left, instance, t.overlaps),
                        layout.left_start, starts);
      }
      for (const auto& [x, start] : layout.engulfed) starts[x] = start;
      if (layout.right) {
        place_starting_at(instance, t.overlaps,
                          t.subsets.left_order(layout.right_set, *layout.right, instance, t.overlaps),
                          layout.right_start, starts);
      }
      break;
    }
  }
  Witness w = assemble(instance, a.m, starts);
  if (static_cast<int>(w.text.size()) != expected_length ||
      static_cast<int>(w.mismatch_positions.size()) > instance.k()) {
    throw ReconstructionError("reconstruction mismatch: witness length " + std::to_string(w.text.size()) +
                              " vs solved length " + std::to_string(expected_length));
  }
  return w;
}

Solution solve(const Instance& instance, const SolverOptions& options, PhaseCounters* counters) {
  require_valid(instance);
  require_size(instance, options.max_strings);

  PhaseCounters build_counters;
  const SolverTables tables = SolverTables::build(instance, &build_counters);
  const std::size_t n = instance.n();

  // Every string exact, m included: always feasible.
  int baseline = kInf;
  for (std::size_t j = 0; j < n; ++j) baseline = std::min(baseline, tables.subsets.right(tables.subsets.full_mask(), j));

  const auto tasks = make_tasks(n, options.engulf_pass);
  unsigned workers = options.threads != 0 ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, tasks.size()));

  std::vector<Candidate> bests(workers);
  std::vector<PhaseCounters> worker_counters(workers);
  std::atomic<std::size_t> next{0};
  auto work = [&](unsigned w) {
    for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
      keep_better(bests[w], run_task(instance, tables, tasks[i], worker_counters[w]), n);
    }
  };
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  Candidate best;
  for (unsigned w = 0; w < workers; ++w) {
    keep_better(best, bests[w], n);
    build_counters += worker_counters[w];
  }
  if (best.length == kInf || best.length > baseline) throw std::logic_error("composition missed the all-exact baseline");
  if (counters) *counters += build_counters;

  Solution sol;
  sol.length = best.length;
  sol.m_index = best.arrangement.m;
  sol.arrangement = best.arrangement;
  if (options.reconstruct) sol.witness = reconstruct(instance, tables, best.arrangement, best.length);
  return sol;
}

VerificationReport verify_solution(const Instance& instance, const Solution& solution) {
  VerificationReport report;
  if (!solution.witness) {
    report.violations.emplace_back("missing witness");
    return report;
  }
  const Witness& w = *solution.witness;
  const std::size_t n = instance.n();
  if (static_cast<int>(w.text.size()) != solution.length) report.violations.emplace_back("length mismatch");
  if (w.offsets.size() != n || solution.m_index >= n) {
    report.violations.emplace_back("offsets do not match the instance");
    return report;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const int off = w.offsets[i];
    if (off < 0 || off + instance.length(i) > static_cast<int>(w.text.size())) {
      report.violations.push_back("offset out of range: string " + std::to_string(i));
      continue;
    }
    int differ = 0;
    for (int t = 0; t < instance.length(i); ++t) {
      if (w.text[static_cast<std::size_t>(off + t)] != instance[i][static_cast<std::size_t>(t)]) ++differ;
    }
    if (i == solution.m_index) {
      if (differ > instance.k()) report.violations.emplace_back("budget exceeded");
      if (differ != static_cast<int>(w.mismatch_positions.size())) report.violations.emplace_back("mismatch list stale");
    } else if (differ != 0) {
      report.violations.push_back("not a superstring: string " + std::to_string(i));
    }
  }
  return report;
}

}  // namespace scsk
