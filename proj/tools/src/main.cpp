#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ehrelay/types.hpp"
#include "ehrelay_tools/experiment.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitViolation = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ehrelay::tools::ConfigError("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ehrelay::tools::ConfigError("cannot write " + path);
  out << text;
}

std::filesystem::path parent_of(const std::string& path) {
  return std::filesystem::path(path).parent_path();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace ehrelay::tools;
  CLI::App app{"Offline power and rate scheduling for an energy-harvesting relay channel"};
  app.require_subcommand(1);

  std::string sweep_path;
  std::string sweep_out;
  auto* sweep = app.add_subcommand("sweep", "Throughput of each scheme over an h0 grid (CSV)");
  sweep->add_option("config", sweep_path, "Sweep config (JSON)")->required();
  sweep->add_option("-o,--output", sweep_out, "Override the config's output path");

  VerifyOptions verify_opts;
  std::string seed_file;
  auto* verify = app.add_subcommand("verify", "Check solvers against brute-force oracles");
  verify->add_option("--instances", verify_opts.instances, "Number of random instances");
  verify->add_option("--max-n", verify_opts.max_n, "Largest N sampled (at most 4)");
  verify->add_option("--seed", verify_opts.seed, "Seed of the first instance");
  verify->add_option("--seed-file", seed_file, "Append failing instance seeds to this file");
  verify->add_flag("--inject-fault", verify_opts.inject_fault,
                   "Corrupt DC schedules before checking (harness self-test)");

  std::string schedule_path;
  std::string scheme = "dc";
  std::string schedule_out;
  auto* schedule = app.add_subcommand("schedule", "Per-block schedule of one instance (CSV)");
  schedule->add_option("config", schedule_path, "Instance config (JSON)")->required();
  schedule->add_option("--scheme", scheme, "dc, ndc or greedy")
      ->check(CLI::IsMember({"dc", "ndc", "greedy"}));
  schedule->add_option("-o,--output", schedule_out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*sweep) {
      SweepConfig config = parse_sweep_config(slurp(sweep_path), parent_of(sweep_path));
      if (!sweep_out.empty()) config.output = sweep_out;
      write_output(config.output, run_sweep(config));
    } else if (*verify) {
      if (!seed_file.empty()) verify_opts.seed_file = seed_file;
      const VerifySummary summary = run_verify(verify_opts);
      std::cout << format_summary(summary);
      return summary.ok() ? kExitOk : kExitViolation;
    } else if (*schedule) {
      const auto instance = parse_instance_config(slurp(schedule_path), parent_of(schedule_path));
      write_output(schedule_out, emit_schedule(instance, parse_scheme(scheme)));
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const ehrelay::InvalidInstance& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitOk;
}
