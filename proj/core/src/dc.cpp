#include "ehrelay/dc.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ehrelay/capacity.hpp"
#include "ehrelay/feasibility.hpp"
#include "ehrelay/objective.hpp"
#include "report.hpp"

namespace ehrelay {

namespace {

// Objective slack within which the forward search counts as optimal.
constexpr double kMatchTol = 1e-12;

SolveReport make_report(const RelayInstance& instance, PowerSchedule schedule) {
  SolveReport report;
  report.mode = Mode::kDc;
  report.schedule = std::move(schedule);
  report.rates = dc_binning_rates(report.schedule, instance.h0());
  report.avg_throughput = dc_objective(report.schedule, instance.h0(), instance.n_blocks());
  detail::fill_tight_blocks(report, instance);
  return report;
}

std::string describe(const ScenarioTag& tag) {
  std::ostringstream os;
  os << "scenario " << to_string(tag.scenario) << " blocks " << tag.start + 1 << ".."
     << tag.end + 1;
  if (tag.scenario == Scenario::kIII) {
    os << " k0=" << *tag.transition_block + 1 << " base=" << tag.base_level;
  } else if (tag.transition_block) {
    os << " (k0=" << *tag.transition_block + 1 << " rejected)";
  }
  return os.str();
}

}  // namespace

std::string_view to_string(Scenario scenario) {
  switch (scenario) {
    case Scenario::kI: return "I";
    case Scenario::kII: return "II";
    case Scenario::kIII: return "III";
  }
  return "?";
}

SolveReport solve_dc_with_direct(const RelayInstance& instance) {
  if (!instance.normalized()) {
    throw ContractViolation("solve_dc_with_direct: instance must be normalized");
  }
  const double h0 = instance.h0();
  if (!(h0 > 0.0)) throw ContractViolation("solve_dc_with_direct: requires 0 < h0 < 1");

  ForwardSearchTrace trace = forward_search_with_direct(instance);
  PowerSchedule& searched = trace.schedule;
  // Relay power beyond the matched level carries no rate.
  for (std::size_t k = 0; k < searched.size(); ++k) {
    searched.relay_power[k] =
        std::min(searched.relay_power[k], matched_relay_power(searched.source_power[k], h0));
  }

  const std::size_t n = instance.n_blocks();
  const PowerSchedule exact = solve_dc_exact(instance);
  const double searched_value = dc_objective(searched, h0, n);
  const double exact_value = dc_objective(exact, h0, n);
  const bool searched_feasible = check_feasible(searched, instance).empty();

  SolveReport report;
  if (searched_feasible && searched_value >= exact_value - kMatchTol) {
    report = make_report(instance, std::move(searched));
    for (const ScenarioTag& tag : trace.segments) report.diagnostics.push_back(describe(tag));
  } else {
    report = make_report(instance, exact);
    std::ostringstream os;
    os << "forward search short of optimum by " << exact_value - searched_value
       << (searched_feasible ? "" : " (infeasible)") << "; price-coordinated schedule used";
    report.diagnostics.push_back(os.str());
  }
  return report;
}

SolveReport solve_dc_no_direct(const RelayInstance& instance) {
  if (!instance.normalized()) {
    throw ContractViolation("solve_dc_no_direct: instance must be normalized");
  }
  if (instance.h0() != 0.0) throw ContractViolation("solve_dc_no_direct: requires h0 = 0");

  const std::size_t n = instance.n_blocks();
  const double b = instance.block_len();
  const auto& es = instance.source_profile().amounts();
  const auto& er = instance.relay_profile().amounts();
  PowerSchedule schedule = PowerSchedule::zeros(n);
  std::vector<std::string> notes;

  double harvested_s = 0.0;
  double harvested_r = 0.0;
  double spent = 0.0;
  std::size_t i = 0;
  while (i < n) {
    const double carry_s = std::max(harvested_s - b * spent, 0.0);
    const double carry_r = std::max(harvested_r - b * spent, 0.0);
    const SegmentCandidate src = source_candidate(instance, i, carry_s);
    const SegmentCandidate rel = relay_candidate(instance, i, carry_r);
    const bool relay_binds = src.level >= rel.level;
    const SegmentCandidate& bind = relay_binds ? rel : src;
    for (std::size_t k = i; k <= bind.exhaust_index; ++k) {
      schedule.source_power[k] = bind.level;
      schedule.relay_power[k] = bind.level;
      harvested_s += es[k];
      harvested_r += er[k];
      spent += bind.level;
    }
    notes.push_back(std::string(relay_binds ? "relay" : "source") + " binds blocks " +
                    std::to_string(i + 1) + ".." + std::to_string(bind.exhaust_index + 1));
    i = bind.exhaust_index + 1;
  }
  SolveReport report = make_report(instance, std::move(schedule));
  report.diagnostics = std::move(notes);
  return report;
}

SolveReport solve_dc(const RelayInstance& instance) {
  return detail::solve_normalized(instance, [](const RelayInstance& inst) {
    if (inst.n_blocks() == 0) return make_report(inst, PowerSchedule::zeros(0));
    return inst.h0() == 0.0 ? solve_dc_no_direct(inst) : solve_dc_with_direct(inst);
  });
}

RateSchedule dc_binning_rates(const PowerSchedule& schedule, double h0) {
  RateSchedule rates;
  const std::size_t n = schedule.size();
  rates.source_rate.resize(n);
  rates.binning_rate.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double ps = schedule.source_power[k];
    const double relay = capacity(schedule.relay_power[k]);
    const double budget = binning_budget(ps, h0);
    rates.source_rate[k] = std::min(capacity(ps), capacity(h0 * ps) + relay);
    rates.binning_rate[k] = std::min(relay, budget);
  }
  return rates;
}

}  // namespace ehrelay
