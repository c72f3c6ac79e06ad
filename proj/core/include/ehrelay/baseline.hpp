#pragma once

#include "ehrelay/types.hpp"

namespace ehrelay {

/// Myopic schedule: the source spends all energy available in each block,
/// aiming for
/// R_G(i) = min{C(E~_S/B), C(h0 E~_S/B) + C(E~_R/B)}.
///
/// The relay spends 2^{2(R_G - C(h0 E~_S/B))} - 1, clamped at zero, and keeps
/// the rest for later blocks. The reported throughput is
/// sum R_G / (2 (N + 1)).
SolveReport greedy_schedule(const RelayInstance& instance);

}  // namespace ehrelay
