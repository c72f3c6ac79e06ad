#pragma once

#include <vector>

#include "ehrelay/types.hpp"

namespace ehrelay {

/// Received SNRs per block for a schedule under a given set of gains.
struct LinkSnrs {
  std::vector<double> source_relay;       ///< P_S(i) h_sr
  std::vector<double> source_destination; ///< P_S(i) h_sd
  std::vector<double> relay_destination;  ///< P_R(i+1) h_rd
};

LinkSnrs link_snrs(const PowerSchedule& schedule, const ChannelGains& gains);

/// Rescales an instance to unit source-relay and relay-destination gains.
///
/// Source energies are multiplied by h_sr, relay energies by h_rd, and the
/// direct gain becomes h0 = h_sd / h_sr; every link keeps its SNR. An
/// already-normalized instance is returned unchanged. Throws InvalidInstance
/// when h0 >= 1.
RelayInstance normalize(const RelayInstance& instance);

/// Maps a schedule computed on normalize(instance) back to raw powers:
/// P_S / h_sr and P_R / h_rd using the instance's original gains.
PowerSchedule denormalize_schedule(const PowerSchedule& schedule,
                                   const RelayInstance& instance);

}  // namespace ehrelay
