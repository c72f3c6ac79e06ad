#pragma once

#include <cstddef>
#include <optional>

#include "ehrelay/types.hpp"

namespace ehrelay {

/// DC average throughput:
/// (1 / (2 (N + 1))) * sum_i min{C(P_S(i)), C(h0 P_S(i)) + C(P_R(i+1))}.
double dc_objective(const PowerSchedule& schedule, double h0, std::size_t n_blocks);

/// Result of evaluating a schedule under the NDC rate-causality constraint.
struct NdcEvaluation {
  bool feasible = true;
  double avg_throughput = 0.0;
  /// 0-based k of the first prefix where the delivered rate exceeds the
  /// decodable source rate.
  std::optional<std::size_t> first_violated_prefix;
  /// Amount by which that prefix overshoots, in bits per channel use.
  double excess = 0.0;
};

/// NDC average throughput
/// (1 / (2 (N + 1))) * sum_i [C(h0 P_S(i)) + C(P_R(i+1))], provided every
/// prefix satisfies sum_{i<=k} [C(h0 P_S(i)) + C(P_R(i+1))] <= sum_{i<=k} C(P_S(i)).
/// A prefix passes when the overshoot is at most tol * max(1, sum C(P_S)).
NdcEvaluation ndc_objective(const PowerSchedule& schedule, double h0, std::size_t n_blocks,
                            double tol = 1e-9);

}  // namespace ehrelay
