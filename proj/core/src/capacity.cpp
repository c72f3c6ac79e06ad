#include "ehrelay/capacity.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ehrelay {

double capacity(double snr) {
  if (!std::isfinite(snr) || snr < 0.0) {
    throw std::domain_error("capacity: SNR must be finite and non-negative, got " +
                            std::to_string(snr));
  }
  return 0.5 * std::log1p(snr) / std::numbers::ln2;
}

double inverse_capacity(double rate) {
  if (!std::isfinite(rate) || rate < 0.0) {
    throw std::domain_error("inverse_capacity: rate must be finite and non-negative, got " +
                            std::to_string(rate));
  }
  return std::expm1(2.0 * rate * std::numbers::ln2);
}

double binning_budget(double source_power, double h0) {
  // log1p form keeps precision when both terms are small.
  return 0.5 * (std::log1p(source_power) - std::log1p(h0 * source_power)) / std::numbers::ln2;
}

double matched_relay_power(double source_power, double h0) {
  return (1.0 - h0) * source_power / (1.0 + h0 * source_power);
}

double source_power_for_relay(double relay_power, double h0) {
  const double denom = 1.0 - h0 - h0 * relay_power;
  if (denom <= 0.0) return std::numeric_limits<double>::infinity();
  return relay_power / denom;
}

}  // namespace ehrelay
