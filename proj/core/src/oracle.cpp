#include "ehrelay/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ehrelay/capacity.hpp"
#include "ehrelay/feasibility.hpp"
#include "ehrelay/ndc.hpp"
#include "ehrelay/objective.hpp"

namespace ehrelay {

namespace {

constexpr double kBoundSlack = 1e-12;
constexpr double kRateTol = 1e-9;

class GridSearch {
 public:
  GridSearch(const RelayInstance& instance, bool ndc)
      : ndc_(ndc),
        h0_(instance.h0()),
        n_(instance.n_blocks()),
        cum_s_(n_),
        cum_r_(n_),
        x_(n_),
        y_(n_) {
    double s = 0.0;
    double r = 0.0;
    for (std::size_t k = 0; k < n_; ++k) {
      s += instance.source_profile()[k];
      r += instance.relay_profile()[k];
      cum_s_[k] = s / instance.block_len();
      cum_r_[k] = r / instance.block_len();
    }
    best_.schedule = PowerSchedule::zeros(n_);
  }

  double max_power() const {
    return n_ ? std::max(cum_s_.back(), cum_r_.back()) : 0.0;
  }

  void run(std::vector<std::vector<double>> xs, std::vector<std::vector<double>> ys) {
    xs_ = std::move(xs);
    ys_ = std::move(ys);
    dfs(0, 0.0, 0.0, 0.0, 0.0);
  }

  const OracleResult& best() const { return best_; }
  OracleResult& best() { return best_; }

 private:
  static void add_bound(std::vector<double>& values, const std::vector<double>& grid,
                        double bound) {
    values.clear();
    if (bound < 0.0) bound = 0.0;
    for (double v : grid) {
      if (v <= bound * (1.0 + kBoundSlack)) values.push_back(std::min(v, bound));
    }
    values.push_back(bound);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
  }

  void dfs(std::size_t k, double used_s, double used_r, double value, double decodable) {
    if (k == n_) {
      if (value > best_.value) {
        best_.value = value;
        best_.schedule.source_power = x_;
        best_.schedule.relay_power = y_;
      }
      return;
    }
    std::vector<double> xs;
    std::vector<double> ys;
    add_bound(xs, xs_[k], cum_s_[k] - used_s);
    for (double x : xs) {
      const double cx = capacity(x);
      const double direct = capacity(h0_ * x);
      double y_bound = cum_r_[k] - used_r;
      if (ndc_) {
        const double room = decodable + cx - value - direct;
        if (room < -kRateTol) continue;
        add_bound(ys, ys_[k], y_bound);
        const double y_tight = inverse_capacity(std::max(room, 0.0));
        if (y_tight < y_bound) ys.push_back(y_tight);
      } else {
        y_bound = std::min(y_bound, matched_relay_power(x, h0_));
        add_bound(ys, ys_[k], y_bound);
      }
      x_[k] = x;
      for (double y : ys) {
        const double cy = capacity(y);
        y_[k] = y;
        if (ndc_) {
          const double delivered = value + direct + cy;
          if (delivered > decodable + cx + kRateTol * std::max(1.0, decodable + cx)) continue;
          dfs(k + 1, used_s + x, used_r + y, delivered, decodable + cx);
        } else {
          dfs(k + 1, used_s + x, used_r + y, value + std::min(cx, direct + cy), 0.0);
        }
      }
    }
    x_[k] = 0.0;
    y_[k] = 0.0;
  }

  bool ndc_;
  double h0_;
  std::size_t n_;
  std::vector<double> cum_s_;
  std::vector<double> cum_r_;
  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<std::vector<double>> xs_;
  std::vector<std::vector<double>> ys_;
  OracleResult best_;
};

std::vector<double> window(double center, double step, int half) {
  std::vector<double> out;
  for (int m = -half; m <= half; ++m) {
    const double v = center + m * step;
    if (v >= 0.0) out.push_back(v);
  }
  return out;
}

OracleResult brute_force(const RelayInstance& instance, const GridSpec& grid, bool ndc) {
  if (grid.max_blocks > 4) throw std::invalid_argument("GridSpec: max_blocks must be at most 4");
  if (instance.n_blocks() > grid.max_blocks) {
    throw std::length_error("oracle: N = " + std::to_string(instance.n_blocks()) +
                            " exceeds max_blocks = " + std::to_string(grid.max_blocks));
  }
  if (!instance.normalized()) throw ContractViolation("oracle: instance must be normalized");
  const std::size_t n = instance.n_blocks();
  GridSearch search(instance, ndc);
  const double top = search.max_power();
  double step = grid.resolution > 0.0 ? grid.resolution : top / 20.0;
  if (!(step > 0.0)) step = 1.0;

  std::vector<double> coarse;
  for (double v = 0.0; v <= top * (1.0 + kBoundSlack); v += step) coarse.push_back(v);
  search.run(std::vector<std::vector<double>>(n, coarse), std::vector<std::vector<double>>(n, coarse));
  search.best().round_values.push_back(search.best().value);

  for (int round = 0; round < grid.refinement_rounds; ++round) {
    step *= grid.shrink;
    const PowerSchedule incumbent = search.best().schedule;
    std::vector<std::vector<double>> xs(n);
    std::vector<std::vector<double>> ys(n);
    for (std::size_t k = 0; k < n; ++k) {
      xs[k] = window(incumbent.source_power[k], step, grid.window);
      ys[k] = window(incumbent.relay_power[k], step, grid.window);
    }
    search.run(std::move(xs), std::move(ys));
    search.best().round_values.push_back(search.best().value);
  }
  OracleResult out = search.best();
  out.value /= 2.0 * (n + 1.0);
  for (double& v : out.round_values) v /= 2.0 * (n + 1.0);
  return out;
}

bool non_decreasing(const std::vector<double>& v, std::size_t& where) {
  for (std::size_t k = 0; k + 1 < v.size(); ++k) {
    if (v[k + 1] < v[k] - 1e-9 * std::max(1.0, std::abs(v[k]))) {
      where = k;
      return false;
    }
  }
  return true;
}

double sum(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

OracleResult brute_force_p1(const RelayInstance& instance, const GridSpec& grid) {
  return brute_force(instance, grid, false);
}

OracleResult brute_force_p2(const RelayInstance& instance, const GridSpec& grid) {
  return brute_force(instance, grid, true);
}

OptimalityReport compare_with_oracle(double solver_value, double oracle_value,
                                     std::optional<std::uint64_t> seed) {
  return OptimalityReport{solver_value, oracle_value, std::max(oracle_value - solver_value, 0.0),
                          seed};
}

std::vector<PropertyViolation> verify_propositions(const RelayInstance& instance,
                                                   const SolveReport& dc,
                                                   const SolveReport& ndc,
                                                   const SolveReport* greedy) {
  if (!instance.normalized()) {
    throw ContractViolation("verify_propositions: instance must be normalized");
  }
  std::vector<PropertyViolation> out;
  auto fail = [&](std::string property, Mode mode, std::string detail) {
    out.push_back(PropertyViolation{std::move(property), mode, std::move(detail)});
  };
  const double h0 = instance.h0();
  const std::size_t n = instance.n_blocks();
  const double b = instance.block_len();

  for (const SolveReport* report : {&dc, &ndc}) {
    const Mode mode = report->mode;
    const PowerSchedule& s = report->schedule;
    if (s.size() != n) {
      fail("shape", mode, "schedule length differs from N");
      return out;
    }
    for (const Violation& v : check_feasible(s, instance)) {
      fail("feasibility", mode,
           std::string(to_string(v.node)) + " prefix " + std::to_string(v.block + 1) +
               " slack " + std::to_string(v.slack));
    }
    std::size_t where = 0;
    if (!non_decreasing(s.source_power, where)) {
      fail("monotone source power", mode, "drops after block " + std::to_string(where + 1));
    }
    if (!non_decreasing(s.relay_power, where)) {
      fail("monotone relay power", mode, "drops after block " + std::to_string(where + 1));
    }
  }

  // DC structure.
  if (!close(dc.avg_throughput, dc_objective(dc.schedule, h0, n), 1e-10)) {
    fail("reported throughput", Mode::kDc, "differs from recomputed objective");
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double ps = dc.schedule.source_power[k];
    const double pr = dc.schedule.relay_power[k];
    if (h0 > 0.0) {
      if (capacity(ps) < capacity(h0 * ps) + capacity(pr) - 1e-9) {
        fail("minimal-energy structure", Mode::kDc,
             "relay rate exceeds binning budget at block " + std::to_string(k + 1));
      }
    } else if (ps != pr) {
      fail("minimal-energy structure", Mode::kDc,
           "P_S != P_R at block " + std::to_string(k + 1));
    }
  }
  const double total_s = instance.source_profile().total();
  const double total_r = instance.relay_profile().total();
  const bool source_exhausted = close(b * sum(dc.schedule.source_power), total_s, 1e-9);
  const bool relay_exhausted = close(b * sum(dc.schedule.relay_power), total_r, 1e-9);
  if (h0 > 0.0 && !source_exhausted) {
    fail("energy exhaustion", Mode::kDc, "source energy left unused");
  } else if (h0 == 0.0 && !source_exhausted && !relay_exhausted) {
    fail("energy exhaustion", Mode::kDc, "neither total energy constraint is tight");
  }

  // NDC rates.
  const NdcEvaluation eval = ndc_objective(ndc.schedule, h0, n);
  if (!eval.feasible) {
    fail("rate causality", Mode::kNdc,
         "prefix " + std::to_string(*eval.first_violated_prefix + 1) + " overshoots");
  }
  if (!close(ndc.avg_throughput, eval.avg_throughput, 1e-10)) {
    fail("reported throughput", Mode::kNdc, "differs from recomputed objective");
  }
  const auto& rb = ndc.rates.binning_rate;
  if (rb.size() != n) {
    fail("shape", Mode::kNdc, "binning rates missing");
  } else {
    double relay_total = 0.0;
    double binned = 0.0;
    double budget = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      relay_total += capacity(ndc.schedule.relay_power[k]);
      binned += rb[k];
      budget += binning_budget(ndc.schedule.source_power[k], h0);
      if (rb[k] < 0.0) fail("binning rate sign", Mode::kNdc, "negative at block " + std::to_string(k + 1));
      if (binned > budget + 1e-9 * std::max(1.0, budget)) {
        fail("binning causality", Mode::kNdc, "prefix " + std::to_string(k + 1) + " exceeds budget");
      }
    }
    if (!close(binned, relay_total, 1e-9)) {
      fail("rate conservation", Mode::kNdc, "sum R_B differs from sum C(P_R)");
    }
  }

  const double gain = ndc.avg_throughput - dc.avg_throughput;
  if (gain < -1e-9) fail("dominance", Mode::kNdc, "NDC below DC by " + std::to_string(-gain));
  if (ndc_strictly_better(instance) != (gain > 1e-6)) {
    fail("strict comparison", Mode::kNdc,
         "predicate disagrees with throughput gap " + std::to_string(gain));
  }

  if (greedy) {
    for (const Violation& v : check_feasible(greedy->schedule, instance)) {
      fail("feasibility", Mode::kGreedy,
           std::string(to_string(v.node)) + " prefix " + std::to_string(v.block + 1));
    }
    if (greedy->avg_throughput > dc.avg_throughput + 1e-9) {
      fail("baseline bound", Mode::kGreedy, "greedy beats DC");
    }
  }
  return out;
}

RelayInstance sample_instance(std::uint64_t seed, const SamplingSpec& spec) {
  if (spec.h0_values.empty()) throw std::invalid_argument("SamplingSpec: empty h0 set");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_n(spec.min_blocks, spec.max_blocks);
  std::uniform_int_distribution<std::size_t> pick_h(0, spec.h0_values.size() - 1);
  std::uniform_real_distribution<double> energy(0.0, spec.max_energy);
  const std::size_t n = pick_n(rng);
  const double h0 = spec.h0_values[pick_h(rng)];
  std::vector<double> es(n);
  std::vector<double> er(n);
  for (double& e : es) e = energy(rng);
  for (double& e : er) e = energy(rng);
  return RelayInstance::normalized_instance(spec.block_len, h0, std::move(es), std::move(er));
}

void append_failing_seed(const std::filesystem::path& path, std::uint64_t seed) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open seed file " + path.string());
  out << seed << '\n';
}

std::vector<std::uint64_t> load_failing_seeds(const std::filesystem::path& path) {
  std::vector<std::uint64_t> seeds;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream is(line);
    std::uint64_t seed = 0;
    if (is >> seed) seeds.push_back(seed);
  }
  return seeds;
}

}  // namespace ehrelay
