// Command-line front end for the SCS_K solver.

#include <iostream>

#include "CLI11.hpp"
#include "scsk/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Shortest common superstring with one mismatch-tolerant string"};
  scsk::cli::RunConfig config;
  std::string gen_spec;
  std::string input;
  std::string strings;

  app.add_option("--k", config.k, "Mismatch budget of the mistake-bearing string")->default_val(0);
  auto* input_opt = app.add_option("--input", input, "Instance file, one string per line");
  auto* strings_opt = app.add_option("--strings", strings, "Comma separated strings");
  auto* gen_opt = app.add_option("--gen", gen_spec, "Random instance: n=<int>,len=<a>..<b>,alphabet=<int>");
  input_opt->excludes(strings_opt)->excludes(gen_opt);
  strings_opt->excludes(gen_opt);
  app.add_option("--seed", config.seed, "Generator seed")->default_val(1);
  app.add_option("--threads", config.threads, "Worker threads (0 = all cores)")->default_val(0);
  app.add_flag("--reconstruct", config.reconstruct, "Emit a witness superstring");
  app.add_flag("--verify", config.verify, "Check the witness independently (implies --reconstruct)");
  app.add_flag("--oracle-check", config.oracle_check, "Compare against the brute-force oracle");
  app.add_flag("--json", config.json, "Machine-readable output");
  app.add_flag("--counters", config.counters, "Report per-phase iteration counts and bounds");
  bool no_engulf = false;
  app.add_flag("--no-engulf", no_engulf, "Skip arrangements where the mistake string spans others");

  CLI11_PARSE(app, argc, argv);

  if (*input_opt) config.input_path = input;
  if (*strings_opt) config.inline_strings = strings;
  if (*gen_opt) {
    try {
      config.gen = scsk::cli::parse_gen_spec(gen_spec);
    } catch (const scsk::Error& e) {
      std::cerr << "error: " << e.what() << '\n';
      return scsk::cli::kFailure;
    }
  }
  config.engulf_pass = !no_engulf;
  return scsk::cli::run(config, std::cout, std::cerr);
}
