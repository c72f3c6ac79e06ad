#pragma once

#include <cstddef>
#include <vector>

#include "ehrelay/types.hpp"

namespace ehrelay {

/// Relative slack allowed on a cumulative energy bound.
inline constexpr double kFeasibilityTol = 1e-9;
/// Absolute slack used when the cumulative bound is zero.
inline constexpr double kFeasibilityFloor = 1e-12;

/// One violated cumulative energy constraint.
struct Violation {
  Node node = Node::kSource;
  std::size_t block = 0;  ///< 0-based source block k of the prefix sum
  double slack = 0.0;     ///< harvested minus consumed; negative when violated
};

/// Checks B * sum_{i<=k} P(i) <= sum_{i<=k} E(i) for both nodes and every k.
///
/// A prefix is accepted when the overshoot is within tol times the
/// cumulative harvested energy (kFeasibilityFloor when that is zero).
/// Negative powers are reported as violations at their block.
std::vector<Violation> check_feasible(const PowerSchedule& schedule,
                                      const RelayInstance& instance,
                                      double tol = kFeasibilityTol);

/// Cumulative-constraint tightness, using the same tolerance rule.
std::vector<std::size_t> tight_blocks(const std::vector<double>& power,
                                      const std::vector<double>& energy, double block_len,
                                      double tol = 1e-7);

}  // namespace ehrelay
