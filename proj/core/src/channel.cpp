#include "ehrelay/channel.hpp"

#include <string>

namespace ehrelay {

namespace {

std::vector<double> scaled(const std::vector<double>& values, double factor) {
  std::vector<double> out;
  out.reserve(values.size());
  for (double v : values) out.push_back(v * factor);
  return out;
}

std::vector<double> divided(const std::vector<double>& values, double divisor) {
  std::vector<double> out;
  out.reserve(values.size());
  for (double v : values) out.push_back(v / divisor);
  return out;
}

}  // namespace

LinkSnrs link_snrs(const PowerSchedule& schedule, const ChannelGains& gains) {
  return LinkSnrs{scaled(schedule.source_power, gains.h_sr),
                  scaled(schedule.source_power, gains.h_sd),
                  scaled(schedule.relay_power, gains.h_rd)};
}

RelayInstance normalize(const RelayInstance& instance) {
  if (instance.normalized()) return instance;
  const ChannelGains& raw = instance.gains();
  RelayInstance out(
      instance.block_len(), ChannelGains{1.0, 1.0, raw.direct_ratio()},
      EnergyProfile(scaled(instance.source_profile().amounts(), raw.h_sr), Node::kSource),
      EnergyProfile(scaled(instance.relay_profile().amounts(), raw.h_rd), Node::kRelay));
  out.original_gains_ = raw;
  return out;
}

PowerSchedule denormalize_schedule(const PowerSchedule& schedule,
                                   const RelayInstance& instance) {
  if (schedule.source_power.size() != instance.n_blocks() ||
      schedule.relay_power.size() != instance.n_blocks()) {
    throw InvalidInstance("denormalize_schedule: schedule has " +
                          std::to_string(schedule.size()) + " blocks, instance has " +
                          std::to_string(instance.n_blocks()));
  }
  const ChannelGains& raw = instance.original_gains();
  return PowerSchedule{divided(schedule.source_power, raw.h_sr),
                       divided(schedule.relay_power, raw.h_rd)};
}

}  // namespace ehrelay
