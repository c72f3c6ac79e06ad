#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ehrelay/types.hpp"

namespace ehrelay {

/// Constant candidate power over [start_block, exhaust_index] for one node.
struct SegmentCandidate {
  std::size_t start_block = 0;
  std::size_t exhaust_index = 0;
  double level = 0.0;  ///< (carry + segment energy) / ((exhaust - start + 1) B)
};

enum class Scenario { kI, kII, kIII };

/// One committed segment of the forward search.
struct ScenarioTag {
  Scenario scenario = Scenario::kI;
  std::size_t start = 0;  ///< first block of the segment
  std::size_t end = 0;    ///< last block committed
  SegmentCandidate source;
  SegmentCandidate relay;
  /// Scenario III: last block before the source jump (k0), segment end j_s and
  /// base level. Scenario II also records k0 when one was found but rejected.
  std::optional<std::size_t> transition_block;
  std::optional<std::size_t> segment_end;
  double base_level = 0.0;
};

struct ForwardSearchTrace {
  PowerSchedule schedule;
  std::vector<ScenarioTag> segments;
};

/// Candidate source level at cursor i with carried energy.
SegmentCandidate source_candidate(const RelayInstance& instance, std::size_t start,
                                  double carry);
/// Candidate relay level at cursor i with carried energy.
SegmentCandidate relay_candidate(const RelayInstance& instance, std::size_t start,
                                 double carry);

/// Three-scenario forward search for 0 < h0 < 1, exactly as tabulated.
/// Requires a normalized instance.
ForwardSearchTrace forward_search_with_direct(const RelayInstance& instance);

/// Exact P1 optimum for 0 <= h0 < 1 by coordinating per-block source and
/// relay energy prices. Each price vector is the exact nested water level of
/// its node given the other node's prices; the two are alternated to a fixed
/// point. Requires a normalized instance.
PowerSchedule solve_dc_exact(const RelayInstance& instance);

/// Optimal DC schedule for 0 < h0 < 1. Runs the forward search and confirms
/// it against solve_dc_exact; when the search falls short the exact schedule
/// is returned and the shortfall is noted in diagnostics.
SolveReport solve_dc_with_direct(const RelayInstance& instance);

/// Optimal DC schedule for h0 = 0 (P_S(i) = P_R(i+1)): the shortest path under
/// the source and relay staircases.
SolveReport solve_dc_no_direct(const RelayInstance& instance);

/// Dispatches on h0. Raw instances are normalized first and the schedule is
/// mapped back to raw powers.
SolveReport solve_dc(const RelayInstance& instance);

/// R(i) = min{C(P_S), C(h0 P_S) + C(P_R)} and
/// R_B(i+1) = min{C(P_R(i+1)), C(P_S(i)) - C(h0 P_S(i))}.
RateSchedule dc_binning_rates(const PowerSchedule& schedule, double h0);

std::string_view to_string(Scenario scenario);

}  // namespace ehrelay
