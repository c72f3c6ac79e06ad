#pragma once

#include <functional>

#include "ehrelay/channel.hpp"
#include "ehrelay/feasibility.hpp"
#include "ehrelay/types.hpp"

namespace ehrelay::detail {

inline void fill_tight_blocks(SolveReport& report, const RelayInstance& instance) {
  report.tight_source_blocks =
      tight_blocks(report.schedule.source_power, instance.source_profile().amounts(),
                   instance.block_len());
  report.tight_relay_blocks =
      tight_blocks(report.schedule.relay_power, instance.relay_profile().amounts(),
                   instance.block_len());
}

/// Runs solve on the normalized instance; the returned schedule and tight
/// sets refer to the caller's (possibly raw) instance.
inline SolveReport solve_normalized(const RelayInstance& instance,
                                    const std::function<SolveReport(const RelayInstance&)>& solve) {
  if (instance.normalized()) return solve(instance);
  SolveReport report = solve(normalize(instance));
  report.schedule = denormalize_schedule(report.schedule, instance);
  fill_tight_blocks(report, instance);
  return report;
}

}  // namespace ehrelay::detail
