#include "ehrelay/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ehrelay {

namespace {

void check_node(const std::vector<double>& power, const std::vector<double>& energy,
                double block_len, double tol, Node node, std::vector<Violation>& out) {
  double consumed = 0.0;
  double harvested = 0.0;
  for (std::size_t k = 0; k < power.size(); ++k) {
    consumed += block_len * power[k];
    harvested += energy[k];
    const double slack = harvested - consumed;
    const double allowed = harvested > 0.0 ? tol * harvested : kFeasibilityFloor;
    if (power[k] < 0.0 || !std::isfinite(power[k]) || slack < -allowed) {
      out.push_back(Violation{node, k, slack});
    }
  }
}

}  // namespace

std::vector<Violation> check_feasible(const PowerSchedule& schedule,
                                      const RelayInstance& instance, double tol) {
  const std::size_t n = instance.n_blocks();
  if (schedule.source_power.size() != n || schedule.relay_power.size() != n) {
    throw InvalidInstance("check_feasible: schedule has " + std::to_string(schedule.size()) +
                          " blocks, instance has " + std::to_string(n));
  }
  std::vector<Violation> out;
  check_node(schedule.source_power, instance.source_profile().amounts(),
             instance.block_len(), tol, Node::kSource, out);
  check_node(schedule.relay_power, instance.relay_profile().amounts(), instance.block_len(),
             tol, Node::kRelay, out);
  return out;
}

std::vector<std::size_t> tight_blocks(const std::vector<double>& power,
                                      const std::vector<double>& energy, double block_len,
                                      double tol) {
  std::vector<std::size_t> out;
  double consumed = 0.0;
  double harvested = 0.0;
  for (std::size_t k = 0; k < power.size(); ++k) {
    consumed += block_len * power[k];
    harvested += energy[k];
    if (harvested - consumed <= std::max(tol * harvested, kFeasibilityFloor)) {
      out.push_back(k);
    }
  }
  return out;
}

}  // namespace ehrelay
