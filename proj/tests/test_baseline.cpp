#include <gtest/gtest.h>

#include "ehrelay/baseline.hpp"
#include "ehrelay/capacity.hpp"
#include "ehrelay/dc.hpp"
#include "ehrelay/feasibility.hpp"
#include "ehrelay/objective.hpp"
#include "ehrelay/oracle.hpp"
#include "ehrelay/profiles.hpp"

namespace ehrelay {
namespace {

TEST(Greedy, SingleBlockIsOptimal) {
  for (double h0 : {0.0, 0.3, 0.7}) {
    const auto inst = RelayInstance::normalized_instance(2.0, h0, {3.0}, {0.4});
    EXPECT_NEAR(greedy_schedule(inst).avg_throughput, solve_dc(inst).avg_throughput, 1e-12);
  }
}

TEST(Greedy, FrontLoadedEnergy) {
  const auto inst = RelayInstance::normalized_instance(1.0, 0.0, {4.0, 0.0}, {4.0, 0.0});
  const SolveReport g = greedy_schedule(inst);
  EXPECT_DOUBLE_EQ(g.avg_throughput, capacity(4.0) / 6.0);
  EXPECT_DOUBLE_EQ(g.schedule.source_power[1], 0.0);
  const double dc = solve_dc(inst).avg_throughput;
  EXPECT_NEAR(dc, 2.0 * capacity(2.0) / 6.0, 1e-12);
  EXPECT_LT(g.avg_throughput, dc);
}

TEST(Greedy, DirectLinkAloneClampsRelay) {
  // No relay energy: R_G = C(h0 P_S) and the relay exponent is zero.
  const auto inst = RelayInstance::normalized_instance(1.0, 0.5, {2.0}, {0.0});
  const SolveReport g = greedy_schedule(inst);
  EXPECT_DOUBLE_EQ(g.schedule.relay_power[0], 0.0);
  EXPECT_DOUBLE_EQ(g.avg_throughput, capacity(1.0) / 4.0);
}

TEST(Greedy, FeasibleAndBelowDc) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const RelayInstance inst =
        sample_instance(seed, SamplingSpec{1, 20, 5.0, 1.0, {0.0, 0.25, 0.5, 0.75}});
    const SolveReport g = greedy_schedule(inst);
    EXPECT_TRUE(check_feasible(g.schedule, inst).empty()) << seed;
    EXPECT_LE(g.avg_throughput, solve_dc(inst).avg_throughput + 1e-9) << seed;
    EXPECT_NEAR(g.avg_throughput, dc_objective(g.schedule, inst.h0(), inst.n_blocks()), 1e-12);
  }
}

TEST(Greedy, ConstantProfilesLargeDirectGainIsOptimal) {
  const auto inst = RelayInstance(1.0, ChannelGains{1.0, 1.0, 0.9}, constant_profile(2.0, 8),
                                  constant_profile(1.0, 8, Node::kRelay));
  EXPECT_NEAR(greedy_schedule(inst).avg_throughput, solve_dc(inst).avg_throughput, 1e-6);
}

}  // namespace
}  // namespace ehrelay
