#include "ehrelay/objective.hpp"

#include <algorithm>
#include <string>

#include "ehrelay/capacity.hpp"

namespace ehrelay {

namespace {

void check_shape(const PowerSchedule& schedule, std::size_t n_blocks) {
  if (schedule.source_power.size() != n_blocks || schedule.relay_power.size() != n_blocks) {
    throw InvalidInstance("schedule length does not match N = " + std::to_string(n_blocks));
  }
}

double normalizer(std::size_t n_blocks) { return 1.0 / (2.0 * (n_blocks + 1.0)); }

}  // namespace

double dc_objective(const PowerSchedule& schedule, double h0, std::size_t n_blocks) {
  check_shape(schedule, n_blocks);
  double sum = 0.0;
  for (std::size_t i = 0; i < n_blocks; ++i) {
    const double ps = schedule.source_power[i];
    const double relayed = capacity(h0 * ps) + capacity(schedule.relay_power[i]);
    sum += std::min(capacity(ps), relayed);
  }
  return normalizer(n_blocks) * sum;
}

NdcEvaluation ndc_objective(const PowerSchedule& schedule, double h0, std::size_t n_blocks,
                            double tol) {
  check_shape(schedule, n_blocks);
  NdcEvaluation out;
  double delivered = 0.0;
  double decodable = 0.0;
  for (std::size_t i = 0; i < n_blocks; ++i) {
    const double ps = schedule.source_power[i];
    delivered += capacity(h0 * ps) + capacity(schedule.relay_power[i]);
    decodable += capacity(ps);
    const double excess = delivered - decodable;
    if (out.feasible && excess > tol * std::max(1.0, decodable)) {
      out.feasible = false;
      out.first_violated_prefix = i;
      out.excess = excess;
    }
  }
  out.avg_throughput = normalizer(n_blocks) * delivered;
  return out;
}

}  // namespace ehrelay
