#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "ehrelay/capacity.hpp"
#include "ehrelay/dc.hpp"
#include "ehrelay/feasibility.hpp"
#include "ehrelay/objective.hpp"
#include "ehrelay/oracle.hpp"
#include "ehrelay/profiles.hpp"

namespace ehrelay {
namespace {

RelayInstance make(double h0, std::vector<double> es, std::vector<double> er, double b = 1.0) {
  return RelayInstance::normalized_instance(b, h0, std::move(es), std::move(er));
}

void expect_vec(const std::vector<double>& got, const std::vector<double>& want, double tol) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t k = 0; k < got.size(); ++k) EXPECT_NEAR(got[k], want[k], tol) << "block " << k;
}

TEST(DcNoDirect, SingleBlockSourceLimited) {
  const SolveReport r = solve_dc(make(0.0, {3.0}, {8.0}));
  expect_vec(r.schedule.source_power, {3.0}, 0.0);
  expect_vec(r.schedule.relay_power, {3.0}, 0.0);
  EXPECT_EQ(r.mode, Mode::kDc);
}

TEST(DcNoDirect, SpreadsSourceOverTwoBlocks) {
  const SolveReport r = solve_dc(make(0.0, {4.0, 0.0}, {2.0, 2.0}));
  expect_vec(r.schedule.source_power, {2.0, 2.0}, 1e-12);
  expect_vec(r.schedule.relay_power, {2.0, 2.0}, 1e-12);
  const OracleResult o = brute_force_p1(make(0.0, {4.0, 0.0}, {2.0, 2.0}));
  EXPECT_GE(r.avg_throughput, o.value - 1e-12);
}

TEST(DcNoDirect, SymmetricConstant) {
  const SolveReport r = solve_dc(make(0.0, {2.0, 2.0}, {2.0, 2.0}));
  expect_vec(r.schedule.source_power, {2.0, 2.0}, 0.0);
}

TEST(DcNoDirect, RelayBindsFirst) {
  const auto inst = make(0.0, {4.0, 0.0}, {1.0, 3.0});
  const SolveReport r = solve_dc(inst);
  expect_vec(r.schedule.source_power, {1.0, 3.0}, 1e-12);
  expect_vec(r.schedule.relay_power, {1.0, 3.0}, 1e-12);
  EXPECT_GE(r.avg_throughput, brute_force_p1(inst).value - 1e-12);
}

TEST(DcNoDirect, EnergyOnlyInLastBlock) {
  const SolveReport r = solve_dc(make(0.0, {0.0, 0.0, 0.0, 6.0}, {9.0, 9.0, 9.0, 9.0}, 2.0));
  expect_vec(r.schedule.source_power, {0.0, 0.0, 0.0, 3.0}, 0.0);
  expect_vec(r.schedule.relay_power, {0.0, 0.0, 0.0, 3.0}, 0.0);
}

TEST(DcNoDirect, ConstantProfilesGiveConstantPowers) {
  const auto inst = RelayInstance(2.0, ChannelGains{}, constant_profile(3.0, 6),
                                  constant_profile(5.0, 6, Node::kRelay));
  const SolveReport r = solve_dc(inst);
  for (double p : r.schedule.source_power) EXPECT_DOUBLE_EQ(p, 1.5);
}

TEST(DcNoDirect, RejectsDirectLink) {
  EXPECT_THROW(solve_dc_no_direct(make(0.3, {1.0}, {1.0})), ContractViolation);
  EXPECT_THROW(solve_dc_with_direct(make(0.0, {1.0}, {1.0})), ContractViolation);
}

TEST(DcWithDirect, ConstantProfilesScenarioI) {
  const double h0 = 0.4;
  const auto inst = make(h0, {3.0, 3.0, 3.0}, {2.0, 2.0, 2.0}, 1.5);
  const SolveReport r = solve_dc(inst);
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_NEAR(r.schedule.source_power[k], 2.0, 1e-12);
    EXPECT_NEAR(r.schedule.relay_power[k], matched_relay_power(2.0, h0), 1e-12);
  }
  const ForwardSearchTrace trace = forward_search_with_direct(inst);
  ASSERT_EQ(trace.segments.size(), 1u);
  EXPECT_EQ(trace.segments[0].scenario, Scenario::kI);
  EXPECT_EQ(trace.segments[0].end, 2u);
}

TEST(DcWithDirect, ConstantProfilesScenarioII) {
  const auto inst = make(0.5, {4.0, 4.0, 4.0}, {0.1, 0.1, 0.1});
  const SolveReport r = solve_dc(inst);
  expect_vec(r.schedule.source_power, {4.0, 4.0, 4.0}, 1e-12);
  expect_vec(r.schedule.relay_power, {0.1, 0.1, 0.1}, 1e-12);
  const ForwardSearchTrace trace = forward_search_with_direct(inst);
  ASSERT_EQ(trace.segments.size(), 1u);
  EXPECT_EQ(trace.segments[0].scenario, Scenario::kII);
}

TEST(DcWithDirect, AbundantRelayMatchesOracle) {
  const auto inst = make(0.5, {2.0, 6.0}, {10.0, 10.0});
  const SolveReport r = solve_dc(inst);
  const OracleResult o = brute_force_p1(inst);
  EXPECT_GE(r.avg_throughput, o.value - 1e-12);
  EXPECT_LE(r.avg_throughput - o.value, 1e-4);
  // Source spends each arrival as it comes; the relay matches it.
  expect_vec(r.schedule.source_power, {2.0, 6.0}, 1e-9);
}

TEST(DcWithDirect, RelayStarvedThenAbundantMatchesOracle) {
  const auto inst = make(0.5, {4.0, 4.0, 4.0}, {0.2, 0.2, 20.0});
  const SolveReport r = solve_dc(inst);
  const OracleResult o = brute_force_p1(inst);
  EXPECT_GE(r.avg_throughput, o.value - 1e-12);
  EXPECT_LE(r.avg_throughput - o.value, 1e-4);
  EXPECT_TRUE(check_feasible(r.schedule, inst).empty());
}

TEST(DcWithDirect, ForwardSearchShortfallIsCorrected) {
  // The three-scenario search misses a block where the relay is exhausted at
  // a level between the two closed-form branches.
  const auto inst = make(0.5, {1.253, 1.088}, {0.285, 2.475});
  const ForwardSearchTrace trace = forward_search_with_direct(inst);
  const SolveReport r = solve_dc(inst);
  const double searched = dc_objective(trace.schedule, 0.5, 2);
  EXPECT_GT(r.avg_throughput, searched + 1e-4);
  EXPECT_GE(r.avg_throughput, brute_force_p1(inst).value - 1e-12);
  ASSERT_FALSE(r.diagnostics.empty());
  EXPECT_NE(r.diagnostics[0].find("forward search short"), std::string::npos);
}

TEST(DcWithDirect, ScenarioThreeJump) {
  // Found by scanning sinusoid instances; the search commits a Scenario III
  // segment and it is optimal.
  const double h0 = 0.6;
  std::vector<double> es = sinusoidal_profile({200, 40, std::numbers::pi / 2, Node::kSource}).amounts();
  std::vector<double> er = sinusoidal_profile({200, 40, 5 * std::numbers::pi / 4, Node::kRelay}).amounts();
  const auto inst = make(h0, es, er, 100.0);
  const ForwardSearchTrace trace = forward_search_with_direct(inst);
  bool found = false;
  for (const ScenarioTag& tag : trace.segments) {
    if (tag.scenario != Scenario::kIII) continue;
    found = true;
    const std::size_t k0 = *tag.transition_block;
    EXPECT_GE(k0, tag.start);
    EXPECT_LT(k0, *tag.segment_end);
    EXPECT_DOUBLE_EQ(trace.schedule.source_power[k0 + 1] - trace.schedule.source_power[k0],
                     (tag.base_level + (1.0 / h0 - 1.0)) - tag.base_level);
    EXPECT_NEAR(trace.schedule.source_power[k0 + 1] - trace.schedule.source_power[k0],
                1.0 / h0 - 1.0, 1e-12);
  }
  EXPECT_TRUE(found);
  const SolveReport r = solve_dc(inst);
  EXPECT_NEAR(r.avg_throughput, dc_objective(trace.schedule, h0, 40), 1e-12);
}

TEST(DcWithDirect, SegmentCandidatesRecomputed) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 100; ++t) {
    const RelayInstance inst = sample_instance(rng(), SamplingSpec{2, 8, 5.0, 1.0, {0.25, 0.5, 0.75}});
    const ForwardSearchTrace trace = forward_search_with_direct(inst);
    const auto& es = inst.source_profile().amounts();
    for (const ScenarioTag& tag : trace.segments) {
      const SegmentCandidate& c = tag.source;
      EXPECT_GE(c.exhaust_index, c.start_block);
      double carry = 0.0;
      for (std::size_t k = 0; k < c.start_block; ++k) carry += es[k] - trace.schedule.source_power[k];
      double seg = std::max(carry, 0.0);
      for (std::size_t k = c.start_block; k <= c.exhaust_index; ++k) seg += es[k];
      EXPECT_NEAR(c.level, seg / (c.exhaust_index - c.start_block + 1), 1e-9);
      // No horizon from the cursor has a lower average.
      double run = std::max(carry, 0.0);
      for (std::size_t j = c.start_block; j < es.size(); ++j) {
        run += es[j];
        EXPECT_GE(run / (j - c.start_block + 1), c.level - 1e-9);
      }
    }
  }
}

TEST(DcBinning, RepetitionCodingCase) {
  const RateSchedule r = dc_binning_rates(PowerSchedule{{2.0}, {2.0}}, 0.0);
  EXPECT_DOUBLE_EQ(r.binning_rate[0], capacity(2.0));
  EXPECT_DOUBLE_EQ(r.source_rate[0], capacity(2.0));
}

TEST(DcBinning, BudgetArmBinds) {
  const RateSchedule r = dc_binning_rates(PowerSchedule{{1.0}, {1e6}}, 0.5);
  EXPECT_NEAR(r.binning_rate[0], 0.5 - 0.5 * std::log2(1.5), 1e-15);
  EXPECT_DOUBLE_EQ(r.source_rate[0], 0.5);
}

TEST(DcBinning, ScenarioOneUsesRelayRate) {
  const auto inst = make(0.4, {3.0, 3.0, 3.0}, {2.0, 2.0, 2.0}, 1.5);
  const SolveReport r = solve_dc(inst);
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_NEAR(r.rates.binning_rate[k], capacity(r.schedule.relay_power[k]), 1e-15);
  }
}

TEST(Dc, EmptyInstance) {
  const SolveReport r = solve_dc(make(0.3, {}, {}));
  EXPECT_EQ(r.schedule.size(), 0u);
  EXPECT_DOUBLE_EQ(r.avg_throughput, 0.0);
}

TEST(Dc, RawInstanceIsDenormalized) {
  const RelayInstance raw(1.0, ChannelGains{2.0, 4.0, 1.0}, EnergyProfile({1.0, 3.0}, Node::kSource),
                          EnergyProfile({0.5, 0.5}, Node::kRelay));
  const SolveReport r = solve_dc(raw);
  const SolveReport n = solve_dc(normalize(raw));
  EXPECT_NEAR(r.avg_throughput, n.avg_throughput, 1e-15);
  EXPECT_TRUE(check_feasible(r.schedule, raw).empty());
  EXPECT_NEAR(r.schedule.source_power[0] * 2.0, n.schedule.source_power[0], 1e-12);
}

class DcProperties : public ::testing::TestWithParam<std::size_t> {};

TEST_P(DcProperties, StructureHolds) {
  SamplingSpec spec{1, GetParam(), 5.0, 1.0, {0.0, 0.1, 0.25, 0.5, 0.75, 0.9}};
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const RelayInstance inst = sample_instance(seed * 31 + GetParam(), spec);
    const SolveReport r = solve_dc(inst);
    const auto& ps = r.schedule.source_power;
    const auto& pr = r.schedule.relay_power;
    const double h0 = inst.h0();
    EXPECT_TRUE(check_feasible(r.schedule, inst).empty()) << seed;
    for (std::size_t k = 0; k + 1 < ps.size(); ++k) {
      EXPECT_GE(ps[k + 1], ps[k] - 1e-9 * std::max(1.0, ps[k])) << seed;
      EXPECT_GE(pr[k + 1], pr[k] - 1e-9 * std::max(1.0, pr[k])) << seed;
    }
    for (std::size_t k = 0; k < ps.size(); ++k) {
      if (h0 > 0) EXPECT_GE(capacity(ps[k]), capacity(h0 * ps[k]) + capacity(pr[k]) - 1e-9);
      else EXPECT_EQ(ps[k], pr[k]);
    }
    const double spent_s = std::accumulate(ps.begin(), ps.end(), 0.0);
    const double spent_r = std::accumulate(pr.begin(), pr.end(), 0.0);
    const double total_s = inst.source_profile().total();
    const double total_r = inst.relay_profile().total();
    if (h0 > 0) {
      EXPECT_NEAR(spent_s, total_s, 1e-9 * std::max(1.0, total_s)) << seed;
    } else {
      EXPECT_TRUE(std::abs(spent_s - total_s) <= 1e-9 * std::max(1.0, total_s) ||
                  std::abs(spent_r - total_r) <= 1e-9 * std::max(1.0, total_r)) << seed;
    }
    EXPECT_NEAR(r.avg_throughput, dc_objective(r.schedule, h0, inst.n_blocks()), 1e-12);
  }
}

INSTANTIATE_TEST_SUITE_P(Sizes, DcProperties, ::testing::Values(3, 10, 40));

TEST(DcOracle, RandomSmallInstances) {
  for (std::uint64_t seed = 500; seed < 560; ++seed) {
    const RelayInstance inst = sample_instance(seed);
    const SolveReport r = solve_dc(inst);
    const OracleResult o = brute_force_p1(inst);
    EXPECT_GE(r.avg_throughput, o.value - 1e-3) << seed;
    EXPECT_LE(o.value, r.avg_throughput + 1e-12) << seed;
  }
}

TEST(DcExact, ConvexReferenceValues) {
  // Reference optima from an independent interior-point solve of the convex
  // program (agreement to 1e-10).
  struct Case { double h0; std::vector<double> es, er; double value; };
  const Case cases[] = {
      {0.5, {1.253, 1.088}, {0.285, 2.475}, 0.1827280713},
      {0.25, {0.0, 3.0, 1.0}, {2.0, 0.0, 0.5}, 0.1981203125},
  };
  for (const Case& c : cases) {
    const auto inst = make(c.h0, c.es, c.er);
    EXPECT_NEAR(dc_objective(solve_dc_exact(inst), c.h0, c.es.size()), c.value, 5e-9);
  }
}

}  // namespace
}  // namespace ehrelay
