#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "orbitlab/errors.hpp"
#include "orbitlab/run.hpp"

namespace {

using orbitlab::Json;

void emit(const Json& report, const std::string& json_out) {
  const std::string text = report.dump(2) + "\n";
  if (json_out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(json_out);
  if (!out) throw orbitlab::ConfigError("cannot write " + json_out);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantitative dynamical Mordell-Lang laboratory"};
  app.require_subcommand(0, 1);
  app.set_version_flag("--version", orbitlab::tool_version);

  std::string input;
  std::string json_out;
  orbitlab::RunOptions opts;
  std::uint64_t n_max = 0;
  std::string mode;
  std::uint64_t primes = 0;
  std::uint64_t seed = 0;

  auto* in_opt = app.add_option("--input", input, "problem file (JSON) or, for reproduce, a manifest");
  auto* n_opt = app.add_option("--n-max", n_max, "largest step to scan");
  auto* mode_opt = app.add_option("--mode", mode, "scan mode")->check(CLI::IsMember({"exact", "modular", "hybrid"}));
  auto* primes_opt = app.add_option("--primes", primes, "number of primes for modular screening");
  auto* seed_opt = app.add_option("--seed", seed, "prime selection seed");
  app.add_option("--json-out", json_out, "write the JSON report to this file");
  app.add_flag("--timings", opts.timings, "include wall-clock timings (reports are then not byte-stable)");
  app.add_option("--threads", opts.threads, "worker threads (0 = hardware concurrency)");

  for (const auto& kind : orbitlab::problem_kinds()) app.add_subcommand(kind, "solve a problem of kind " + kind)->fallthrough();
  app.add_subcommand("reproduce", "run the acceptance manifest")->fallthrough();

  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().empty() ? std::string() : app.get_subcommands().front()->get_name();

  try {
    if (*n_opt) opts.n_max = n_max;
    if (*mode_opt) opts.mode = mode;
    if (*primes_opt) opts.primes = primes;
    if (*seed_opt) opts.seed = seed;
    if (!*in_opt) throw orbitlab::ConfigError("--input is required");

    if (command == "reproduce") {
      const Json manifest = orbitlab::read_json_file(input);
      const auto result =
          orbitlab::reproduce_suite(manifest, std::filesystem::path(input).parent_path(), opts);
      for (const auto& line : result.lines) std::cout << line << "\n";
      std::cout << (result.exit_code == 0 ? "all criteria passed" : "some criteria FAILED") << "\n";
      if (!json_out.empty()) emit(result.report, json_out);
      return result.exit_code;
    }

    Json doc = orbitlab::read_json_file(input);
    if (command.empty() && !(doc.is_object() && doc.contains("kind")))
      throw orbitlab::ConfigError("problem has no \"kind\"; name it or pass a subcommand");
    if (doc.is_object() && !doc.contains("kind")) doc["kind"] = command;
    if (!command.empty() && doc.is_object() && doc["kind"] != command)
      throw orbitlab::ConfigError("problem kind " + doc["kind"].dump() + " does not match subcommand " + command);
    const auto result = orbitlab::run_problem(doc, opts);
    emit(result.report, json_out);
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
