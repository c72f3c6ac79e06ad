#include "ehrelay/ndc.hpp"

#include <algorithm>

#include "ehrelay/capacity.hpp"
#include "ehrelay/channel.hpp"
#include "ehrelay/feasibility.hpp"
#include "ehrelay/objective.hpp"
#include "ehrelay/staircase.hpp"
#include "report.hpp"

namespace ehrelay {

namespace {

constexpr double kStrictMargin = 1e-9;

std::vector<double> budgets(const std::vector<double>& source_powers, double h0) {
  std::vector<double> out;
  out.reserve(source_powers.size());
  for (double p : source_powers) out.push_back(binning_budget(p, h0));
  return out;
}

}  // namespace

std::string_view to_string(Binding binding) {
  switch (binding) {
    case Binding::kNone: return "none";
    case Binding::kRateCausality: return "rate";
    case Binding::kEnergy: return "energy";
  }
  return "?";
}

std::vector<double> solve_source_p3(const EnergyProfile& profile, double block_len) {
  return staircase_levels(profile.amounts(), 0, 0.0, block_len);
}

RelayRatePlan solve_relay_p5(const std::vector<double>& source_powers, double h0,
                             const EnergyProfile& relay_profile, double block_len) {
  const std::size_t n = source_powers.size();
  if (relay_profile.size() != n) {
    throw InvalidInstance("solve_relay_p5: relay profile length differs from source schedule");
  }
  const std::vector<double> budget = budgets(source_powers, h0);
  const auto& er = relay_profile.amounts();
  RelayRatePlan plan{std::vector<double>(n, 0.0), std::vector<Binding>(n, Binding::kNone)};

  double budget_sum = 0.0;
  double rate_sum = 0.0;
  double harvested = 0.0;
  double spent = 0.0;
  std::size_t i = 0;
  while (i < n) {
    const double rate_carry = std::max(budget_sum - rate_sum, 0.0);
    const double energy_carry = std::max(harvested - block_len * spent, 0.0);
    const StaircaseStep by_rate = min_slope_step(budget, i, rate_carry, 1.0);
    const StaircaseStep by_energy = min_slope_step(er, i, energy_carry, block_len);
    const double energy_rate = capacity(by_energy.level);
    const bool rate_binds = by_rate.level <= energy_rate;
    const double level = rate_binds ? by_rate.level : energy_rate;
    const std::size_t end = rate_binds ? by_rate.end : by_energy.end;
    const double power = inverse_capacity(level);
    for (std::size_t k = i; k <= end; ++k) {
      plan.rates[k] = level;
      budget_sum += budget[k];
      rate_sum += level;
      harvested += er[k];
      spent += power;
    }
    plan.binding[end] = rate_binds ? Binding::kRateCausality : Binding::kEnergy;
    i = end + 1;
  }
  return plan;
}

RateSchedule binning_backfill(const std::vector<double>& source_powers,
                              const std::vector<double>& relay_rates, double h0) {
  const std::size_t n = source_powers.size();
  if (relay_rates.size() != n) {
    throw InvalidInstance("binning_backfill: relay rates and source powers differ in length");
  }
  const std::vector<double> budget = budgets(source_powers, h0);
  RateSchedule out;
  out.binning_rate.resize(n);
  out.source_rate.resize(n);
  for (std::size_t k = 0; k < n; ++k) out.binning_rate[k] = std::min(relay_rates[k], budget[k]);

  double surplus = 0.0;
  for (std::size_t k = n; k-- > 0;) {
    const double temp = relay_rates[k] - budget[k];
    if (temp > 0.0) {
      surplus += temp;
    } else if (temp < 0.0) {
      out.binning_rate[k] += std::min(-temp, surplus);
      surplus = std::max(surplus + temp, 0.0);
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    out.source_rate[k] = capacity(h0 * source_powers[k]) + out.binning_rate[k];
  }
  return out;
}

std::vector<double> minimize_source_energy_h0_zero(const RateSchedule& rates, double h0) {
  if (h0 != 0.0) {
    throw ContractViolation("minimize_source_energy_h0_zero: only valid for h0 = 0");
  }
  std::vector<double> out;
  out.reserve(rates.binning_rate.size());
  for (double r : rates.binning_rate) out.push_back(inverse_capacity(std::max(r, 0.0)));
  return out;
}

SolveReport solve_ndc(const RelayInstance& instance) {
  return detail::solve_normalized(instance, [](const RelayInstance& inst) {
    const double h0 = inst.h0();
    const double b = inst.block_len();
    SolveReport report;
    report.mode = Mode::kNdc;
    std::vector<double> source = solve_source_p3(inst.source_profile(), b);
    const RelayRatePlan plan = solve_relay_p5(source, h0, inst.relay_profile(), b);
    report.rates = binning_backfill(source, plan.rates, h0);
    if (h0 == 0.0) source = minimize_source_energy_h0_zero(report.rates, h0);

    report.schedule.source_power = std::move(source);
    report.schedule.relay_power.reserve(plan.rates.size());
    for (double r : plan.rates) report.schedule.relay_power.push_back(inverse_capacity(r));
    report.avg_throughput =
        ndc_objective(report.schedule, h0, inst.n_blocks()).avg_throughput;
    detail::fill_tight_blocks(report, inst);
    for (std::size_t k = 0; k < plan.binding.size(); ++k) {
      if (plan.binding[k] != Binding::kNone) {
        report.diagnostics.push_back("relay segment ends at block " + std::to_string(k + 1) +
                                     " (" + std::string(to_string(plan.binding[k])) + ")");
      }
    }
    return report;
  });
}

bool ndc_strictly_better(const RelayInstance& raw) {
  const RelayInstance instance = normalize(raw);
  const double h0 = instance.h0();
  const std::vector<double> source =
      solve_source_p3(instance.source_profile(), instance.block_len());
  const RelayRatePlan plan =
      solve_relay_p5(source, h0, instance.relay_profile(), instance.block_len());
  if (h0 == 0.0) {
    // Without a direct link the NDC source schedule is not unique. DC ties
    // NDC exactly when the relay powers are themselves a feasible source
    // schedule (P_S = P_R reaches the same sum rate).
    const auto& es = instance.source_profile().amounts();
    double spent = 0.0;
    double harvested = 0.0;
    for (std::size_t k = 0; k < source.size(); ++k) {
      spent += instance.block_len() * inverse_capacity(plan.rates[k]);
      harvested += es[k];
      if (spent > harvested * (1.0 + kFeasibilityTol) + kFeasibilityFloor) return true;
    }
    return false;
  }
  for (std::size_t k = 0; k < source.size(); ++k) {
    if (plan.rates[k] > binning_budget(source[k], h0) + kStrictMargin) return true;
  }
  return false;
}

}  // namespace ehrelay
