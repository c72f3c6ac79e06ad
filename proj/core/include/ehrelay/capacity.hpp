#pragma once

namespace ehrelay {

/// AWGN capacity 0.5 * log2(1 + snr) in bits per channel use.
/// Throws std::domain_error for negative or non-finite snr.
double capacity(double snr);

/// Inverse of capacity(): 2^(2 rate) - 1.
/// Throws std::domain_error for negative or non-finite rate.
double inverse_capacity(double rate);

/// Relay share of the DF rate a source power can support:
/// C(p) - C(h0 p), the most a binning index can usefully carry.
double binning_budget(double source_power, double h0);

/// Largest relay power worth spending alongside source power p:
/// (1 - h0) p / (1 + h0 p). Beyond it the source-relay hop caps the rate.
double matched_relay_power(double source_power, double h0);

/// Inverse of matched_relay_power() in p; +infinity when the relay power is
/// at or above the asymptote (1 - h0) / h0.
double source_power_for_relay(double relay_power, double h0);

}  // namespace ehrelay
