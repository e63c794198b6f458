// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "scsk/cli.hpp"
#include "scsk/oracle.hpp"
#include "scsk/solver.hpp"

namespace {

using namespace scsk;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

void report(int id, const char* name, const Outcome& o) {
  std::printf("ACCEPTANCE %d %-28s %s  %s\n", id, name, o.pass ? "PASS" : "FAIL", o.detail.c_str());
  std::fflush(stdout);
}

Instance draw(std::mt19937_64& rng, std::size_t min_n, std::size_t max_n, int max_len, int alphabet, long long k) {
  for (;;) {
    cli::GenParams p;
    p.n = min_n + static_cast<std::size_t>(rng() % (max_n - min_n + 1));
    p.min_len = 1;
    p.max_len = max_len;
    p.alphabet = alphabet;
    try {
      return cli::generate_instance(p, rng(), k);
    } catch (const GenerationError&) {
    }
  }
}

SolverOptions reconstructing(unsigned threads = 1) {
  SolverOptions o;
  o.reconstruct = true;
  o.threads = threads;
  return o;
}

std::string describe(const Instance& inst) {
  std::string s;
  for (std::size_t i = 0; i < inst.n(); ++i) s += (i ? "," : "") + encode_utf8(inst[i]);
  return "{" + s + "} K=" + std::to_string(inst.k());
}

// Witness checks shared by suites 1-3 and reported as criterion 4.
struct WitnessTally {
  std::size_t checked = 0;
  Outcome outcome;

  void check(const Instance& inst, const Solution& sol) {
    ++checked;
    if (!sol.witness) {
      outcome.fail("no witness for " + describe(inst));
      return;
    }
    if (static_cast<int>(sol.witness->text.size()) != sol.length)
      outcome.fail("witness length differs for " + describe(inst));
    const auto rep = verify_solution(inst, sol);
    if (!rep.ok()) outcome.fail(rep.violations.front() + " for " + describe(inst));
  }
};

Outcome exhaustive_suite(WitnessTally& witnesses) {
  std::vector<std::string> pool;
  for (int len = 1; len <= 3; ++len)
    for (int bits = 0; bits < (1 << len); ++bits) {
      std::string s;
      for (int i = len - 1; i >= 0; --i) s += ((bits >> i) & 1) ? 'b' : 'a';
      pool.push_back(s);
    }

  Outcome o;
  const auto start = Clock::now();
  std::size_t instances = 0, mismatches = 0;
  for (std::size_t a = 0; a < pool.size(); ++a)
    for (std::size_t b = a + 1; b < pool.size(); ++b)
      for (std::size_t c = b + 1; c < pool.size(); ++c)
        for (long long k = 0; k <= 2; ++k) {
          const Instance inst({decode_utf8(pool[a]), decode_utf8(pool[b]), decode_utf8(pool[c])}, k);
          if (!validate(inst).ok()) continue;
          ++instances;
          const auto sol = solve(inst, reconstructing());
          witnesses.check(inst, sol);
          const int expected = oracle::brute_force_scsk(inst).length;
          if (sol.length != expected) {
            ++mismatches;
            o.fail("solver " + std::to_string(sol.length) + " oracle " + std::to_string(expected) + " on " +
                   describe(inst));
          }
        }
  const double secs = seconds_since(start);
  if (secs >= 300.0) o.fail("runtime " + std::to_string(secs) + " s");
  const std::string summary = std::to_string(instances - mismatches) + "/" + std::to_string(instances) +
                              " agree, " + std::to_string(secs) + " s";
  o.detail = o.pass ? summary : summary + "; first: " + o.detail;
  return o;
}

std::vector<Instance> random_suite_instances() {
  std::mt19937_64 rng(20240501);
  std::vector<Instance> out;
  for (int i = 0; i < 500; ++i) {
    const int alphabet = 2 + static_cast<int>(rng() % 2);
    const long long k = static_cast<long long>(rng() % 4);
    out.push_back(draw(rng, 2, 4, 6, alphabet, k));
  }
  return out;
}

Outcome random_suite(const std::vector<Instance>& suite, WitnessTally& witnesses) {
  Outcome o;
  const auto start = Clock::now();
  std::size_t agree = 0;
  for (const auto& inst : suite) {
    const auto sol = solve(inst, reconstructing());
    witnesses.check(inst, sol);
    const int expected = oracle::brute_force_scsk(inst).length;
    if (sol.length == expected)
      ++agree;
    else
      o.fail("solver " + std::to_string(sol.length) + " oracle " + std::to_string(expected) + " on " +
             describe(inst));
  }
  const double secs = seconds_since(start);
  if (secs >= 600.0) o.fail("runtime " + std::to_string(secs) + " s");
  const std::string summary =
      std::to_string(agree) + "/" + std::to_string(suite.size()) + " agree, " + std::to_string(secs) + " s";
  o.detail = o.pass ? summary : summary + "; first: " + o.detail;
  return o;
}

Outcome zero_budget_suite(WitnessTally& witnesses) {
  std::mt19937_64 rng(777);
  Outcome o;
  std::size_t agree = 0;
  for (int i = 0; i < 200; ++i) {
    const Instance inst = draw(rng, 1, 6, 5, 2 + static_cast<int>(rng() % 2), 0);
    const auto sol = solve(inst, reconstructing());
    witnesses.check(inst, sol);
    const int expected = oracle::brute_force_scs(inst);
    if (sol.length == expected)
      ++agree;
    else
      o.fail("solver " + std::to_string(sol.length) + " scs " + std::to_string(expected) + " on " + describe(inst));
  }
  const std::string summary = std::to_string(agree) + "/200 agree";
  o.detail = o.pass ? summary : summary + "; first: " + o.detail;
  return o;
}

Outcome monotonicity_suite() {
  std::mt19937_64 rng(4242);
  Outcome o;
  for (int i = 0; i < 100; ++i) {
    const Instance base = draw(rng, 2, 5, 6, 2 + static_cast<int>(rng() % 3), 0);
    int longest = 0;
    for (std::size_t s = 0; s < base.n(); ++s) longest = std::max(longest, base.length(s));
    int prev = solve(base).length;
    for (long long k = 0; k <= 5; ++k) {
      const int cur = solve(base.with_budget(k)).length;
      if (cur > prev) o.fail("length grows at K=" + std::to_string(k) + " on " + describe(base.with_budget(k)));
      if (cur < longest) o.fail("below longest string on " + describe(base.with_budget(k)));
      prev = cur;
    }
  }
  if (o.pass) o.detail = "100 instances, K = 0..5";
  return o;
}

Outcome duality_suite() {
  std::mt19937_64 rng(9090);
  Outcome o;
  std::size_t entries = 0;
  for (int i = 0; i < 100; ++i) {
    const Instance inst = draw(rng, 1, 7, 6, 2 + static_cast<int>(rng() % 3), 0);
    const auto forward = SolverTables::build(inst);
    const auto backward = SolverTables::build(inst.reversed());
    for (Mask mask = 1; mask <= forward.subsets.full_mask(); ++mask)
      for (std::size_t j = 0; j < inst.n(); ++j) {
        if (!((mask >> j) & 1U)) continue;
        ++entries;
        if (forward.subsets.left(mask, j) != backward.subsets.right(mask, j))
          o.fail("mask " + std::to_string(mask) + " index " + std::to_string(j) + " on " + describe(inst));
      }
  }
  if (o.pass) o.detail = std::to_string(entries) + " entries equal";
  return o;
}

Outcome counter_suite() {
  Outcome o;
  std::size_t runs = 0;
  for (std::size_t n = 3; n <= 8; ++n)
    for (int c = 2; c <= 8; ++c) {
      cli::GenParams p;
      p.n = n;
      p.min_len = c;
      p.max_len = c;
      p.alphabet = 4;
      const long long k = c / 2;
      const Instance inst = cli::generate_instance(p, 1000 * n + static_cast<std::uint64_t>(c), k);
      PhaseCounters counters;
      (void)solve(inst, {}, &counters);
      ++runs;
      for (const auto& b : counter_bounds(counters, n, static_cast<std::uint64_t>(c), static_cast<std::uint64_t>(k)))
        if (!b.within())
          o.fail(std::string(b.phase) + " " + std::to_string(b.count) + " > " + std::to_string(b.bound) +
                 " at n=" + std::to_string(n) + " c=" + std::to_string(c));
    }
  if (o.pass) o.detail = std::to_string(runs) + " grid points within bounds";
  return o;
}

Outcome determinism_suite(const std::vector<Instance>& suite) {
  Outcome o;
  for (const auto& inst : suite) {
    std::string reference;
    for (unsigned threads : {1U, 2U, 8U}) {
      PhaseCounters counters;
      const auto sol = solve(inst, reconstructing(threads), &counters);
      const std::string doc = cli::solution_json(inst, sol, &counters).dump(2);
      if (threads == 1)
        reference = doc;
      else if (doc != reference)
        o.fail(std::to_string(threads) + " threads differ on " + describe(inst));
    }
  }
  if (o.pass) o.detail = std::to_string(suite.size()) + " instances identical at 1, 2, 8 threads";
  return o;
}

}  // namespace

int main() {
  bool all = true;
  auto record = [&](int id, const char* name, const Outcome& o) {
    report(id, name, o);
    all = all && o.pass;
  };

  try {
    WitnessTally witnesses;
    record(1, "exhaustive-oracle", exhaustive_suite(witnesses));
    const auto suite2 = random_suite_instances();
    record(2, "random-oracle", random_suite(suite2, witnesses));
    record(3, "zero-budget-scs", zero_budget_suite(witnesses));
    if (witnesses.outcome.pass) witnesses.outcome.detail = std::to_string(witnesses.checked) + " witnesses verified";
    record(4, "witness-validity", witnesses.outcome);
    record(5, "monotonicity", monotonicity_suite());
    record(6, "reversal-duality", duality_suite());
    record(7, "counter-bounds", counter_suite());
    record(8, "thread-determinism", determinism_suite(suite2));
  } catch (const std::exception& e) {
    std::printf("ACCEPTANCE aborted: %s\n", e.what());
    return 1;
  }
  return all ? 0 : 1;
}
