#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ehrelay/types.hpp"

namespace ehrelay {

/// Coarse-to-fine grid for the brute-force oracles.
struct GridSpec {
  /// Initial step; 0 selects (max cumulative energy) / (20 B).
  double resolution = 0.0;
  int refinement_rounds = 3;
  double shrink = 0.2;
  /// Grid points on each side of the incumbent in refinement rounds.
  int window = 5;
  /// Largest N the oracle accepts; at most 4.
  std::size_t max_blocks = 4;
};

struct OracleResult {
  double value = 0.0;
  PowerSchedule schedule;
  /// Best value after the coarse pass and after each refinement round.
  std::vector<double> round_values;
};

/// Best P1 value over per-block power grids that respect both cumulative
/// energy budgets. Each block's candidates also include the power that
/// spends the remaining budget exactly. Relay powers above the matched level
/// (1 - h0) x / (1 + h0 x) are skipped since they cannot raise the rate.
/// Throws std::length_error when N exceeds grid.max_blocks.
OracleResult brute_force_p1(const RelayInstance& instance, const GridSpec& grid = {});

/// Best P2 value over the same grids, keeping only schedules whose every
/// prefix passes ndc_objective's rate-causality test.
OracleResult brute_force_p2(const RelayInstance& instance, const GridSpec& grid = {});

struct OptimalityReport {
  double solver_value = 0.0;
  double oracle_value = 0.0;
  /// oracle_value - solver_value, clamped at 0 when negative.
  double gap = 0.0;
  std::optional<std::uint64_t> worst_instance_seed;
};

OptimalityReport compare_with_oracle(double solver_value, double oracle_value,
                                     std::optional<std::uint64_t> seed = {});

/// A failed structural check on a solver report.
struct PropertyViolation {
  std::string property;
  Mode mode = Mode::kDc;
  std::string detail;
};

/// Checks the structural properties of optimal schedules on a normalized
/// instance: feasibility, reported throughput, non-decreasing powers, per
/// block DC structure, source exhaustion, NDC rate conservation and
/// causality, NDC >= DC, and agreement of ndc_strictly_better with the
/// throughput difference. A greedy report, when given, is checked only for
/// feasibility and for not beating DC.
std::vector<PropertyViolation> verify_propositions(const RelayInstance& instance,
                                                   const SolveReport& dc,
                                                   const SolveReport& ndc,
                                                   const SolveReport* greedy = nullptr);

/// Random normalized instance with uniform energies in [0, max_energy].
struct SamplingSpec {
  std::size_t min_blocks = 1;
  std::size_t max_blocks = 3;
  double max_energy = 5.0;
  double block_len = 1.0;
  std::vector<double> h0_values{0.0, 0.25, 0.5, 0.75};
};

RelayInstance sample_instance(std::uint64_t seed, const SamplingSpec& spec = {});

/// Appends one seed per line.
void append_failing_seed(const std::filesystem::path& path, std::uint64_t seed);
std::vector<std::uint64_t> load_failing_seeds(const std::filesystem::path& path);

}  // namespace ehrelay
