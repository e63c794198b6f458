#include "scsk/cli.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "scsk/oracle.hpp"

namespace scsk::cli {

namespace {

long long parse_int(std::string_view text, std::string_view what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError("bad " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

bool related(const Sequence& a, const Sequence& b) {
  return a.find(b) != Sequence::npos || b.find(a) != Sequence::npos;
}

Instance load_instance(const RunConfig& config) {
  const int sources = (config.input_path ? 1 : 0) + (config.inline_strings ? 1 : 0) + (config.gen ? 1 : 0);
  if (sources != 1) throw InputError("give exactly one of --input, --strings, --gen");
  if (config.gen) return generate_instance(*config.gen, config.seed, config.k);
  if (config.inline_strings) {
    std::string text = *config.inline_strings;
    for (char& ch : text)
      if (ch == ',') ch = '\n';
    return parse_instance(text, config.k);
  }
  std::ifstream in(*config.input_path);
  if (!in) throw std::runtime_error("cannot open " + *config.input_path);
  return parse_instance(in, config.k);
}

void print_human(std::ostream& out, const Instance& instance, const Solution& sol, const PhaseCounters* counters) {
  out << "length=" << sol.length << " m=" << sol.m_index << '\n';
  if (sol.witness) {
    out << "witness=" << encode_utf8(sol.witness->text) << '\n';
    out << "offsets=";
    for (std::size_t i = 0; i < sol.witness->offsets.size(); ++i) out << (i ? " " : "") << sol.witness->offsets[i];
    out << "\nmismatches=";
    for (std::size_t i = 0; i < sol.witness->mismatch_positions.size(); ++i)
      out << (i ? " " : "") << sol.witness->mismatch_positions[i];
    out << '\n';
  }
  if (counters) {
    for (const auto& b : counter_bounds(*counters, instance.n(), static_cast<std::uint64_t>(instance.c()),
                                        static_cast<std::uint64_t>(instance.k()))) {
      out << "counter " << b.phase << ' ' << b.count << " <= " << b.bound << '\n';
    }
  }
}

}  // namespace

GenParams parse_gen_spec(std::string_view spec) {
  GenParams p;
  bool have_n = false, have_len = false, have_alphabet = false;
  std::stringstream ss{std::string(spec)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("bad generator item '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (key == "n") {
      p.n = static_cast<std::size_t>(parse_int(value, "n"));
      have_n = true;
    } else if (key == "len") {
      const auto dots = value.find("..");
      if (dots == std::string::npos) {
        p.min_len = p.max_len = static_cast<int>(parse_int(value, "len"));
      } else {
        p.min_len = static_cast<int>(parse_int(std::string_view(value).substr(0, dots), "len"));
        p.max_len = static_cast<int>(parse_int(std::string_view(value).substr(dots + 2), "len"));
      }
      have_len = true;
    } else if (key == "alphabet") {
      p.alphabet = static_cast<int>(parse_int(value, "alphabet"));
      have_alphabet = true;
    } else {
      throw InputError("unknown generator key '" + key + "'");
    }
  }
  if (!have_n || !have_len || !have_alphabet) throw InputError("generator needs n, len and alphabet");
  return p;
}

Instance generate_instance(const GenParams& params, std::uint64_t seed, long long k) {
  if (params.n == 0) throw InputError("no strings");
  if (params.alphabet < 2 || params.alphabet > 26) throw InputError("alphabet size must be in [2, 26]");
  if (params.min_len < 1 || params.max_len < params.min_len) throw InputError("empty length range");

  std::mt19937_64 engine(seed);
  const auto span = static_cast<std::uint64_t>(params.max_len - params.min_len + 1);
  const auto symbols = static_cast<std::uint64_t>(params.alphabet);
  const std::size_t retry_bound = 1000 * params.n;

  std::vector<Sequence> strings;
  std::size_t rejected = 0;
  while (strings.size() < params.n) {
    const auto len = static_cast<std::size_t>(params.min_len) + static_cast<std::size_t>(engine() % span);
    Sequence s(len, U'a');
    for (auto& ch : s) ch = static_cast<Symbol>(U'a' + engine() % symbols);
    bool clash = false;
    for (const auto& prev : strings) clash = clash || related(prev, s);
    if (!clash) {
      strings.push_back(std::move(s));
    } else if (++rejected > retry_bound) {
      throw GenerationError("generation infeasible");
    }
  }
  return Instance(std::move(strings), k);
}

nlohmann::ordered_json solution_json(const Instance& instance, const Solution& solution,
                                     const PhaseCounters* counters) {
  nlohmann::ordered_json doc;
  doc["n"] = instance.n();
  doc["k"] = instance.k();
  doc["length"] = solution.length;
  doc["mistake_string_index"] = solution.m_index;
  if (solution.witness) {
    doc["witness"] = encode_utf8(solution.witness->text);
    doc["offsets"] = solution.witness->offsets;
    doc["mismatch_positions"] = solution.witness->mismatch_positions;
  } else {
    doc["witness"] = nullptr;
    doc["offsets"] = nullptr;
    doc["mismatch_positions"] = nullptr;
  }
  if (counters) {
    nlohmann::ordered_json phases;
    for (const auto& b : counter_bounds(*counters, instance.n(), static_cast<std::uint64_t>(instance.c()),
                                        static_cast<std::uint64_t>(instance.k()))) {
      phases[std::string(b.phase)] = {{"count", b.count}, {"bound", b.bound}};
    }
    doc["counters"] = std::move(phases);
  } else {
    doc["counters"] = nullptr;
  }
  return doc;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const Instance instance = load_instance(config);

    SolverOptions options;
    options.reconstruct = config.reconstruct || config.verify;
    options.threads = config.threads;
    options.engulf_pass = config.engulf_pass;

    PhaseCounters counters;
    const Solution sol = solve(instance, options, config.counters ? &counters : nullptr);

    if (config.verify) {
      const auto report = verify_solution(instance, sol);
      for (const auto& v : report.violations) err << "verify: " << v << '\n';
      if (!report.ok()) return kFailure;
    }
    if (config.counters) {
      for (const auto& b : counter_bounds(counters, instance.n(), static_cast<std::uint64_t>(instance.c()),
                                          static_cast<std::uint64_t>(instance.k()))) {
        if (!b.within()) {
          err << "counter " << b.phase << " = " << b.count << " exceeds bound " << b.bound << '\n';
          return kFailure;
        }
      }
    }

    const PhaseCounters* shown = config.counters ? &counters : nullptr;
    if (config.json) {
      out << solution_json(instance, sol, shown).dump(2) << '\n';
    } else {
      print_human(out, instance, sol, shown);
    }

    if (config.oracle_check) {
      const auto reference = oracle::brute_force_scsk(instance);
      if (reference.length != sol.length) {
        err << "oracle disagreement: solver " << sol.length << ", oracle " << reference.length << '\n';
        return kOracleDisagreement;
      }
      err << "oracle agrees: " << reference.length << '\n';
    }
    return kOk;
  } catch (const ValidationError& e) {
    err << e.what();
    return kInvalidInstance;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInstance;
  } catch (const GenerationError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInstance;
  } catch (const OracleLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kOracleLimits;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace scsk::cli
