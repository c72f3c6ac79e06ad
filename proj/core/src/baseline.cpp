#include "ehrelay/baseline.hpp"

#include <algorithm>

#include "ehrelay/capacity.hpp"
#include "ehrelay/dc.hpp"
#include "ehrelay/objective.hpp"
#include "report.hpp"

namespace ehrelay {

SolveReport greedy_schedule(const RelayInstance& instance) {
  return detail::solve_normalized(instance, [](const RelayInstance& inst) {
    const std::size_t n = inst.n_blocks();
    const double b = inst.block_len();
    const double h0 = inst.h0();
    const auto& es = inst.source_profile().amounts();
    const auto& er = inst.relay_profile().amounts();

    SolveReport report;
    report.mode = Mode::kGreedy;
    report.schedule = PowerSchedule::zeros(n);
    double harvested_s = 0.0;
    double harvested_r = 0.0;
    double spent_s = 0.0;
    double spent_r = 0.0;
    double rate_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      harvested_s += es[i];
      harvested_r += er[i];
      const double avail_s = std::max(harvested_s - b * spent_s, 0.0) / b;
      const double avail_r = std::max(harvested_r - b * spent_r, 0.0) / b;
      const double direct = capacity(h0 * avail_s);
      const double rate = std::min(capacity(avail_s), direct + capacity(avail_r));
      const double ps = avail_s;
      const double pr = rate > direct ? std::min(inverse_capacity(rate - direct), avail_r) : 0.0;
      report.schedule.source_power[i] = ps;
      report.schedule.relay_power[i] = pr;
      spent_s += ps;
      spent_r += pr;
      rate_sum += rate;
    }
    report.rates = dc_binning_rates(report.schedule, h0);
    report.avg_throughput = rate_sum / (2.0 * (n + 1.0));
    detail::fill_tight_blocks(report, inst);
    return report;
  });
}

}  // namespace ehrelay
