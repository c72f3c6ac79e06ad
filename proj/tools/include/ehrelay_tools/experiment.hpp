#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ehrelay/oracle.hpp"
#include "ehrelay/types.hpp"

namespace ehrelay::tools {

/// Invalid experiment configuration; maps to exit code 1.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepConfig {
  double block_len = 100.0;
  std::size_t n_blocks = 40;
  double amp_source = 200.0;
  double amp_relay = 200.0;
  double theta = 0.0;
  std::vector<double> h0_values;
  std::vector<Mode> schemes{Mode::kDc, Mode::kNdc, Mode::kGreedy};
  std::uint64_t seed = 0;
  std::string output = "-";  ///< "-" writes to standard output
};

/// Sweep from a JSON document. Required: B, N, A_S, A_R, theta, h0, output.
/// h0 is a list or {"start", "stop", "step"}; schemes defaults to all three
/// and seed to 0. Relative output paths resolve against base_dir.
SweepConfig parse_sweep_config(std::string_view text,
                               const std::filesystem::path& base_dir = {});

/// The reproduction setup: B = 100, N = 40, theta = 5 pi / 4,
/// A_S = A_R = 200, h0 = 0, 0.05, ..., 0.95.
SweepConfig default_sweep_config();

/// h0 = start, start + step, ... up to stop inclusive.
std::vector<double> h0_grid(double start, double stop, double step);

/// Throws ConfigError unless every h0 lies in [0, 1) and the grid is non-empty.
void validate(const SweepConfig& config);

struct SweepRow {
  double h0 = 0.0;
  std::optional<double> dc;
  std::optional<double> ndc;
  std::optional<double> greedy;
  bool ndc_strictly_better = false;
};

std::vector<SweepRow> run_sweep_rows(const SweepConfig& config);

/// CSV with header h0,dc_bps_hz,ndc_bps_hz,greedy_bps_hz,ndc_strictly_better.
/// Schemes not selected leave their column empty.
std::string run_sweep(const SweepConfig& config);

/// Shortest decimal that parses back to the same double.
std::string format_double(double v);

/// Instance from a JSON document with "B", either "h0" or
/// "gains": {"h_sr", "h_rd", "h_sd"}, and "source" / "relay" given as an
/// amounts array, a profile file path (relative to base_dir), or
/// {"sinusoid": {"A", "N", "phase"}}.
RelayInstance parse_instance_config(std::string_view text,
                                    const std::filesystem::path& base_dir = {});

Mode parse_scheme(std::string_view name);

/// Per-block CSV: block,P_S,P_R_next,R,R_B_next,tight_source,tight_relay.
std::string emit_schedule(const RelayInstance& instance, Mode scheme);

struct VerifyOptions {
  std::size_t instances = 100;
  std::size_t max_n = 3;
  std::uint64_t seed = 0;
  SamplingSpec sampling{};
  GridSpec grid{};
  /// Failing instance seeds are appended here when set.
  std::optional<std::filesystem::path> seed_file;
  /// Test hook: perturbs every DC schedule before checking.
  bool inject_fault = false;
};

struct VerifyFinding {
  std::uint64_t instance_seed = 0;
  std::string description;
};

struct VerifySummary {
  std::size_t instances = 0;
  OptimalityReport dc;   ///< worst P1 gap
  OptimalityReport ndc;  ///< worst P2 gap
  std::vector<VerifyFinding> findings;
  bool ok() const { return findings.empty(); }
};

/// Checks random instances against the oracles and the property suite.
/// Instance k uses seed options.seed + k. Throws ConfigError for max_n > 4.
VerifySummary run_verify(const VerifyOptions& options);

std::string format_summary(const VerifySummary& summary);

}  // namespace ehrelay::tools
