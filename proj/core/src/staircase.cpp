#include "ehrelay/staircase.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ehrelay {

StaircaseStep min_slope_step(std::span<const double> amounts, std::size_t start, double carry,
                             double scale) {
  if (start >= amounts.size()) throw std::out_of_range("min_slope_step: start past end");
  StaircaseStep best{start, 0.0};
  bool first = true;
  double sum = carry;
  for (std::size_t j = start; j < amounts.size(); ++j) {
    sum += amounts[j];
    const double level = sum / (static_cast<double>(j - start + 1) * scale);
    if (first || level <= best.level + 1e-12 * std::max(1.0, std::abs(level))) {
      best = StaircaseStep{j, level};
      first = false;
    }
  }
  best.level = std::max(best.level, 0.0);
  return best;
}

std::vector<double> staircase_levels(std::span<const double> amounts, std::size_t start,
                                     double carry, double scale) {
  std::vector<double> out(amounts.size(), 0.0);
  std::size_t i = start;
  while (i < amounts.size()) {
    const StaircaseStep step = min_slope_step(amounts, i, carry, scale);
    std::fill(out.begin() + static_cast<std::ptrdiff_t>(i),
              out.begin() + static_cast<std::ptrdiff_t>(step.end) + 1, step.level);
    carry = 0.0;
    i = step.end + 1;
  }
  return out;
}

}  // namespace ehrelay
