#include "scsk/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace scsk::oracle {

namespace {

void check_limits(const Instance& instance, const OracleLimits& limits) {
  bool ok = instance.n() <= limits.max_n && instance.total_len() <= limits.max_total_len &&
            static_cast<std::size_t>(instance.c()) <= limits.max_len_cap;
  if (!ok) throw OracleLimitError("oracle limits");
}

class Search {
 public:
  Search(const Instance& instance, int len) : inst_(instance), len_(len), cells_(static_cast<std::size_t>(len)) {}

  std::optional<OracleResult> run() {
    for (std::size_t m = 0; m < inst_.n(); ++m) {
      m_ = m;
      exact_.clear();
      for (std::size_t i = 0; i < inst_.n(); ++i)
        if (i != m) exact_.push_back(i);
      offsets_.assign(inst_.n(), 0);
      if (place(0)) return OracleResult{len_, m_, offsets_};
    }
    return std::nullopt;
  }

 private:
  struct Cell {
    Symbol ch = 0;
    int depth = 0;  // how many exact strings cover it
  };

  bool place(std::size_t next) {
    if (next == exact_.size()) return place_mistake_string();
    const std::size_t s = exact_[next];
    const Sequence& str = inst_[s];
    const int size = static_cast<int>(str.size());
    for (int off = 0; off + size <= len_; ++off) {
      bool fits = true;
      for (int t = 0; t < size && fits; ++t) {
        const Cell& c = cells_[static_cast<std::size_t>(off + t)];
        fits = c.depth == 0 || c.ch == str[static_cast<std::size_t>(t)];
      }
      if (!fits) continue;
      for (int t = 0; t < size; ++t) {
        Cell& c = cells_[static_cast<std::size_t>(off + t)];
        c.ch = str[static_cast<std::size_t>(t)];
        ++c.depth;
      }
      offsets_[s] = off;
      const bool done = place(next + 1);
      for (int t = 0; t < size; ++t) --cells_[static_cast<std::size_t>(off + t)].depth;
      if (done) return true;
    }
    return false;
  }

  bool place_mistake_string() {
    const Sequence& str = inst_[m_];
    const int size = static_cast<int>(str.size());
    for (int off = 0; off + size <= len_; ++off) {
      int conflicts = 0;
      for (int t = 0; t < size; ++t) {
        const Cell& c = cells_[static_cast<std::size_t>(off + t)];
        if (c.depth > 0 && c.ch != str[static_cast<std::size_t>(t)]) ++conflicts;
      }
      if (conflicts <= inst_.k()) {
        offsets_[m_] = off;
        return true;
      }
    }
    return false;
  }

  const Instance& inst_;
  int len_;
  std::vector<Cell> cells_;
  std::size_t m_ = 0;
  std::vector<std::size_t> exact_;
  std::vector<int> offsets_;
};

}  // namespace

int direct_overlap(const Sequence& a, const Sequence& b) {
  const std::size_t limit = std::min(a.size(), b.size());
  for (std::size_t t = limit; t-- > 1;) {
    if (a.compare(a.size() - t, t, b, 0, t) == 0) return static_cast<int>(t);
  }
  return 0;
}

OracleResult brute_force_scsk(const Instance& instance, const OracleLimits& limits) {
  check_limits(instance, limits);
  for (int len = instance.c(); len <= static_cast<int>(instance.total_len()); ++len) {
    if (auto found = Search(instance, len).run()) return *found;
  }
  // Concatenation always fits; reaching here means the instance has empty strings.
  throw OracleLimitError("oracle found no placement");
}

int brute_force_scs(const Instance& instance, const OracleLimits& limits) {
  if (instance.n() > limits.max_scs_n) throw OracleLimitError("oracle limits");
  std::vector<std::size_t> order(instance.n());
  std::iota(order.begin(), order.end(), std::size_t{0});
  int best = static_cast<int>(instance.total_len());
  do {
    int len = instance.length(order[0]);
    for (std::size_t i = 1; i < order.size(); ++i) {
      len += instance.length(order[i]) - direct_overlap(instance[order[i - 1]], instance[order[i]]);
    }
    best = std::min(best, len);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

}  // namespace scsk::oracle
