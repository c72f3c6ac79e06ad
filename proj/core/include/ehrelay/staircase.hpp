#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ehrelay {

/// Minimum-average-slope segment of a cumulative staircase.
struct StaircaseStep {
  std::size_t end = 0;  ///< last block of the segment (inclusive, 0-based)
  double level = 0.0;   ///< (carry + sum_{k=start}^{end} amounts[k]) / ((end - start + 1) * scale)
};

/// argmin_j (carry + sum_{k=start}^{j} amounts[k]) / ((j - start + 1) * scale)
/// over j in [start, N). Ties within a relative 1e-12 go to the largest j.
StaircaseStep min_slope_step(std::span<const double> amounts, std::size_t start, double carry,
                             double scale);

/// Piecewise-constant levels obtained by repeatedly applying min_slope_step
/// from start; entries before start are zero. This is the tightest
/// non-decreasing schedule under the cumulative budget (taut string).
std::vector<double> staircase_levels(std::span<const double> amounts, std::size_t start,
                                     double carry, double scale);

}  // namespace ehrelay
