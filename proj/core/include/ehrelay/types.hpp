#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ehrelay {

/// Raised when an instance lies outside the regime the solvers support
/// (h_sd / h_sr >= 1, non-positive gains or block length, shape mismatches).
class InvalidInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation is applied outside its contract, e.g. the
/// h0 = 0 source-energy minimization called on an instance with a direct link.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Node { kSource, kRelay };

std::string_view to_string(Node node);

/// Harvested energy per block for one node, in joules per block.
///
/// Entry i is the energy arriving at the start of source block i (for the
/// source) or relay block i + 1 (for the relay); both are indexed by source
/// block so that amounts()[i] pairs with PowerSchedule entry i.
class EnergyProfile {
 public:
  EnergyProfile() = default;
  /// Throws InvalidInstance if any entry is negative or non-finite.
  EnergyProfile(std::vector<double> amounts, Node node);

  const std::vector<double>& amounts() const noexcept { return amounts_; }
  Node node() const noexcept { return node_; }
  std::size_t size() const noexcept { return amounts_.size(); }
  bool empty() const noexcept { return amounts_.empty(); }
  double operator[](std::size_t i) const { return amounts_[i]; }
  double total() const noexcept;

 private:
  std::vector<double> amounts_;
  Node node_ = Node::kSource;
};

/// Link power gains. The solvers assume the source-relay link dominates the
/// direct link: h_sd / h_sr < 1.
struct ChannelGains {
  double h_sr = 1.0;
  double h_rd = 1.0;
  double h_sd = 0.0;

  /// Effective direct-link gain after normalization, h_sd / h_sr.
  double direct_ratio() const noexcept { return h_sd / h_sr; }
};

/// A complete scheduling problem.
///
/// When normalized() is true, gains() are (1, 1, h0) and the profiles are
/// already scaled; original_gains() keeps the raw gains for denormalization.
class RelayInstance {
 public:
  RelayInstance() = default;
  /// Validates shapes, B > 0, gains > 0 (h_sd >= 0) and h_sd / h_sr < 1.
  RelayInstance(double block_len, ChannelGains gains, EnergyProfile source,
                EnergyProfile relay);

  /// Shorthand for an already-normalized instance with direct gain h0.
  static RelayInstance normalized_instance(double block_len, double h0,
                                           std::vector<double> source_energy,
                                           std::vector<double> relay_energy);

  std::size_t n_blocks() const noexcept { return source_.size(); }
  double block_len() const noexcept { return block_len_; }
  const ChannelGains& gains() const noexcept { return gains_; }
  const ChannelGains& original_gains() const noexcept { return original_gains_; }
  const EnergyProfile& source_profile() const noexcept { return source_; }
  const EnergyProfile& relay_profile() const noexcept { return relay_; }
  bool normalized() const noexcept { return normalized_; }
  /// Direct-link gain h0 of the normalized problem.
  double h0() const noexcept { return gains_.direct_ratio(); }

 private:
  friend RelayInstance normalize(const RelayInstance&);

  double block_len_ = 1.0;
  ChannelGains gains_{};
  ChannelGains original_gains_{};
  EnergyProfile source_{};
  EnergyProfile relay_{};
  bool normalized_ = false;
};

/// Per-block powers. relay_power[i] is P_R(i+1): the relay power spent in
/// block i + 1 on behalf of source block i.
struct PowerSchedule {
  std::vector<double> source_power;
  std::vector<double> relay_power;

  static PowerSchedule zeros(std::size_t n);
  std::size_t size() const noexcept { return source_power.size(); }
};

/// Per-block source rates R(i) and relay binning rates R_B(i+1), bits per
/// channel use.
struct RateSchedule {
  std::vector<double> source_rate;
  std::vector<double> binning_rate;
};

enum class Mode { kDc, kNdc, kGreedy };

std::string_view to_string(Mode mode);

/// Outcome of one solver run.
struct SolveReport {
  PowerSchedule schedule;
  RateSchedule rates;
  /// Average throughput in bps/Hz, including the 1 / (2 (N + 1)) factor.
  double avg_throughput = 0.0;
  /// 0-based source blocks k where B * sum_{i<=k} P_S(i) = sum_{i<=k} E_S(i).
  std::vector<std::size_t> tight_source_blocks;
  /// 0-based source blocks k where the relay cumulative constraint is tight.
  std::vector<std::size_t> tight_relay_blocks;
  Mode mode = Mode::kDc;
  /// Free-form solver notes (scenario trace, fallback reasons).
  std::vector<std::string> diagnostics;
};

}  // namespace ehrelay
