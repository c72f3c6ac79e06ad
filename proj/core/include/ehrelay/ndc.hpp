#pragma once

#include <cstddef>
#include <vector>

#include "ehrelay/types.hpp"

namespace ehrelay {

/// Constraint family that closes a relay rate segment.
enum class Binding { kNone, kRateCausality, kEnergy };

std::string_view to_string(Binding binding);

/// Relay rates r(i+1) = C(P_R(i+1)) from the relay rate problem.
struct RelayRatePlan {
  std::vector<double> rates;
  /// Set on the last block of each constant-rate segment to the family whose
  /// cumulative constraint is tight there; kNone elsewhere.
  std::vector<Binding> binding;
};

/// Staircase water-filling of one source profile: non-decreasing powers that
/// exhaust the total energy at block N.
std::vector<double> solve_source_p3(const EnergyProfile& profile, double block_len);

/// Maximizes sum r(i+1) subject to the binning-rate budget
/// sum_{i<=k} r <= sum_{i<=k} [C(P_S) - C(h0 P_S)] and the relay energy budget
/// B sum_{i<=k} (2^{2r} - 1) <= sum_{i<=k} E_R. On equal candidate levels the
/// rate-budget segment is taken.
RelayRatePlan solve_relay_p5(const std::vector<double>& source_powers, double h0,
                             const EnergyProfile& relay_profile, double block_len);

/// Binning rates R_B(i+1), starting from min{r, C(P_S) - C(h0 P_S)} and moving
/// later relay surplus backward into earlier deficits. Also fills
/// R(i) = C(h0 P_S(i)) + R_B(i+1).
RateSchedule binning_backfill(const std::vector<double>& source_powers,
                              const std::vector<double>& relay_rates, double h0);

/// Smallest source powers carrying the binning rates when h0 = 0:
/// P_S(i) = 2^{2 R_B(i+1)} - 1. Throws ContractViolation when h0 > 0.
std::vector<double> minimize_source_energy_h0_zero(const RateSchedule& rates, double h0);

/// NDC schedule by separation: source water-filling, relay rate allocation,
/// binning backfill and (for h0 = 0) the source-energy reduction.
SolveReport solve_ndc(const RelayInstance& instance);

/// Whether NDC beats DC. For 0 < h0 < 1: some block's relay rate exceeds its
/// binning budget C(P_S) - C(h0 P_S) by more than 1e-9, with P_S from
/// solve_source_p3. For h0 = 0: the NDC relay powers violate the source's
/// cumulative energy budget (otherwise P_S = P_R attains the NDC rate).
bool ndc_strictly_better(const RelayInstance& instance);

}  // namespace ehrelay
