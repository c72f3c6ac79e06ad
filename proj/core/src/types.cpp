#include "ehrelay/types.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <utility>

namespace ehrelay {

std::string_view to_string(Node node) {
  return node == Node::kSource ? "source" : "relay";
}

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::kDc: return "dc";
    case Mode::kNdc: return "ndc";
    case Mode::kGreedy: return "greedy";
  }
  return "unknown";
}

EnergyProfile::EnergyProfile(std::vector<double> amounts, Node node)
    : amounts_(std::move(amounts)), node_(node) {
  for (std::size_t i = 0; i < amounts_.size(); ++i) {
    if (!std::isfinite(amounts_[i]) || amounts_[i] < 0.0) {
      throw InvalidInstance(std::string(to_string(node_)) + " energy at block " +
                            std::to_string(i + 1) + " must be finite and non-negative");
    }
  }
}

double EnergyProfile::total() const noexcept {
  return std::accumulate(amounts_.begin(), amounts_.end(), 0.0);
}

RelayInstance::RelayInstance(double block_len, ChannelGains gains, EnergyProfile source,
                             EnergyProfile relay)
    : block_len_(block_len),
      gains_(gains),
      original_gains_(gains),
      source_(std::move(source)),
      relay_(std::move(relay)) {
  if (!std::isfinite(block_len_) || block_len_ <= 0.0) {
    throw InvalidInstance("block length must be positive");
  }
  if (source_.size() != relay_.size()) {
    throw InvalidInstance("source and relay profiles must have the same length (" +
                          std::to_string(source_.size()) + " vs " +
                          std::to_string(relay_.size()) + ")");
  }
  if (!(gains_.h_sr > 0.0) || !(gains_.h_rd > 0.0) || !(gains_.h_sd >= 0.0) ||
      !std::isfinite(gains_.h_sr) || !std::isfinite(gains_.h_rd) ||
      !std::isfinite(gains_.h_sd)) {
    throw InvalidInstance("channel gains must be finite with h_sr, h_rd > 0 and h_sd >= 0");
  }
  if (gains_.direct_ratio() >= 1.0) {
    throw InvalidInstance("unsupported regime: h_sd / h_sr = " +
                          std::to_string(gains_.direct_ratio()) + " must be below 1");
  }
  normalized_ = gains_.h_sr == 1.0 && gains_.h_rd == 1.0;
}

RelayInstance RelayInstance::normalized_instance(double block_len, double h0,
                                                 std::vector<double> source_energy,
                                                 std::vector<double> relay_energy) {
  return RelayInstance(block_len, ChannelGains{1.0, 1.0, h0},
                       EnergyProfile(std::move(source_energy), Node::kSource),
                       EnergyProfile(std::move(relay_energy), Node::kRelay));
}

PowerSchedule PowerSchedule::zeros(std::size_t n) {
  return PowerSchedule{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
}

}  // namespace ehrelay
