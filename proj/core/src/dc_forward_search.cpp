#include <algorithm>
#include <limits>
#include <cmath>

#include "ehrelay/capacity.hpp"
#include "ehrelay/dc.hpp"
#include "ehrelay/staircase.hpp"

namespace ehrelay {

namespace {

constexpr double kStrictTol = 1e-9;

double residual(const std::vector<double>& energy, const std::vector<double>& power,
                std::size_t upto, double block_len) {
  double harvested = 0.0;
  double spent = 0.0;
  for (std::size_t k = 0; k < upto; ++k) {
    harvested += energy[k];
    spent += power[k];
  }
  return std::max(harvested - block_len * spent, 0.0);
}

SegmentCandidate candidate(const EnergyProfile& profile, std::size_t start, double carry,
                           double block_len) {
  const StaircaseStep step = min_slope_step(profile.amounts(), start, carry, block_len);
  return SegmentCandidate{start, step.end, step.level};
}

}  // namespace

SegmentCandidate source_candidate(const RelayInstance& instance, std::size_t start,
                                  double carry) {
  return candidate(instance.source_profile(), start, carry, instance.block_len());
}

SegmentCandidate relay_candidate(const RelayInstance& instance, std::size_t start,
                                 double carry) {
  return candidate(instance.relay_profile(), start, carry, instance.block_len());
}

ForwardSearchTrace forward_search_with_direct(const RelayInstance& instance) {
  if (!instance.normalized()) {
    throw ContractViolation("forward_search_with_direct: instance must be normalized");
  }
  const double h0 = instance.h0();
  if (!(h0 > 0.0)) throw ContractViolation("forward_search_with_direct: requires 0 < h0 < 1");

  const std::size_t n = instance.n_blocks();
  const double b = instance.block_len();
  const auto& es = instance.source_profile().amounts();
  const auto& er = instance.relay_profile().amounts();
  const double jump = 1.0 / h0 - 1.0;

  ForwardSearchTrace trace;
  trace.schedule = PowerSchedule::zeros(n);
  auto& ps = trace.schedule.source_power;
  auto& pr = trace.schedule.relay_power;

  std::size_t i = 0;
  while (i < n) {
    const double carry_s = residual(es, ps, i, b);
    const double carry_r = residual(er, pr, i, b);
    const SegmentCandidate src = source_candidate(instance, i, carry_s);
    const SegmentCandidate rel = relay_candidate(instance, i, carry_r);
    const double matched = matched_relay_power(src.level, h0);

    ScenarioTag tag;
    tag.start = i;
    tag.source = src;
    tag.relay = rel;

    if (rel.level >= matched - kStrictTol) {
      for (std::size_t k = i; k <= src.exhaust_index; ++k) {
        ps[k] = src.level;
        pr[k] = std::min(matched, rel.level);
      }
      tag.scenario = Scenario::kI;
      tag.end = src.exhaust_index;
      trace.segments.push_back(tag);
      i = src.exhaust_index + 1;
      continue;
    }

    const std::vector<double> ls = staircase_levels(es, i, carry_s, b);
    const std::vector<double> lr = staircase_levels(er, i, carry_r, b);

    std::optional<std::size_t> k0;
    for (std::size_t k = i; k + 1 < n; ++k) {
      if (!(lr[k] < matched_relay_power(ls[k], h0) - kStrictTol)) break;
      if (lr[k + 1] > matched_relay_power(ls[k + 1], h0) + kStrictTol) {
        k0 = k;
        break;
      }
    }

    if (k0) {
      double best = std::numeric_limits<double>::infinity();
      std::size_t js = *k0 + 1;
      double sum = carry_s;
      for (std::size_t j = i; j < n; ++j) {
        sum += es[j];
        if (j <= *k0) continue;
        const double level = (sum - static_cast<double>(j - *k0) * jump * b) /
                             (static_cast<double>(j - i + 1) * b);
        if (level <= best + 1e-12 * std::max(1.0, std::abs(level))) {
          best = level;
          js = j;
        }
      }
      const double prev = i > 0 ? ps[i - 1] : 0.0;
      const bool admissible =
          src.level + kStrictTol >= best &&
          best + kStrictTol >= std::max(source_power_for_relay(lr[*k0], h0), prev) &&
          best + jump <= source_power_for_relay(lr[*k0 + 1], h0) + kStrictTol;
      if (admissible) {
        for (std::size_t k = i; k <= *k0; ++k) {
          ps[k] = best;
          pr[k] = lr[k];
        }
        for (std::size_t k = *k0 + 1; k <= js; ++k) {
          ps[k] = best + jump;
          pr[k] = matched_relay_power(ps[k], h0);
        }
        tag.scenario = Scenario::kIII;
        tag.end = js;
        tag.transition_block = k0;
        tag.segment_end = js;
        tag.base_level = best;
        trace.segments.push_back(tag);
        i = js + 1;
        continue;
      }
    }

    const std::size_t end = k0 ? std::min(*k0, src.exhaust_index) : src.exhaust_index;
    for (std::size_t k = i; k <= end; ++k) {
      ps[k] = src.level;
      pr[k] = lr[k];
    }
    tag.scenario = Scenario::kII;
    tag.end = end;
    tag.transition_block = k0;
    trace.segments.push_back(tag);
    i = end + 1;
  }
  return trace;
}

}  // namespace ehrelay
