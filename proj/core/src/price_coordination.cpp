// Exact P1 solver by dual price coordination.
//
// With energy prices alpha (source) and beta (relay) per block, the block
// problem max min{ln(1+x), ln(1+h0 x) + ln(1+y)} - alpha x - beta y has a
// closed form except on the kink y = g(x), where a scalar root is needed.
// Given one node's prices, the other node's optimal prices are the nested
// water levels of its cumulative budget, found one segment at a time.

#include <algorithm>
#include <cmath>
#include <functional>

#include "ehrelay/capacity.hpp"
#include "ehrelay/dc.hpp"

namespace ehrelay {

namespace {

struct BlockPowers {
  double x = 0.0;
  double y = 0.0;
};

// Prices at or above 1 make the block idle on either node.
constexpr double kMaxPrice = 1.0;

double kink_root(double h0, double alpha, double beta, double lo, double hi) {
  auto f = [&](double x) {
    const double d = 1.0 + h0 * x;
    return 1.0 / (1.0 + x) - beta * (1.0 - h0) / (d * d) - alpha;
  };
  auto df = [&](double x) {
    const double d = 1.0 + h0 * x;
    return -1.0 / ((1.0 + x) * (1.0 + x)) + 2.0 * beta * h0 * (1.0 - h0) / (d * d * d);
  };
  if (f(lo) <= 0.0) return lo;
  if (f(hi) >= 0.0) return hi;
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 100; ++it) {
    const double fx = f(x);
    if (fx > 0.0) lo = x; else hi = x;
    if (hi - lo <= 1e-15 * std::max(1.0, hi)) break;
    const double slope = df(x);
    double next = slope < 0.0 ? x - fx / slope : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 1e-16 * std::max(1.0, x)) {
      x = next;
      break;
    }
    x = next;
  }
  return x;
}

BlockPowers block_optimum(double h0, double alpha, double beta) {
  if (alpha >= kMaxPrice) return {};
  if (h0 == 0.0) {
    const double x = std::max(1.0 / (alpha + beta) - 1.0, 0.0);
    return {x, x};
  }
  if (beta >= kMaxPrice) return {std::max(1.0 / alpha - 1.0 / h0, 0.0), 0.0};
  if (beta <= 0.0) {
    const double x = std::max(1.0 / alpha - 1.0, 0.0);
    return {x, matched_relay_power(x, h0)};
  }
  const double x2 = std::max(1.0 / alpha - 1.0 / h0, 0.0);
  const double y2 = 1.0 / beta - 1.0;
  if (y2 < matched_relay_power(x2, h0)) return {x2, y2};
  const double hi = std::max(std::min(1.0 / alpha - 1.0, source_power_for_relay(y2, h0)), x2);
  const double x = kink_root(h0, alpha, beta, x2, hi);
  return {x, matched_relay_power(x, h0)};
}

using Demand = std::function<double(std::size_t, double)>;

// Nested water levels of one node: at each cursor the price is the largest
// clearing price over all horizons, ties going to the longest horizon.
std::vector<double> nested_prices(const std::vector<double>& energy, double block_len,
                                  const Demand& demand) {
  const std::size_t n = energy.size();
  std::vector<double> price(n, kMaxPrice);
  std::vector<double> usage(n, 0.0);
  double carry = 0.0;
  std::size_t c = 0;

  // Largest j with demand(c..j, p) >= supply(c..j), or n when none.
  auto binding = [&](double p) {
    std::size_t found = n;
    double used = 0.0;
    double supply = carry;
    for (std::size_t j = c; j < n; ++j) {
      used += block_len * demand(j, p);
      supply += energy[j];
      if (used >= supply) found = j;
    }
    return found;
  };

  while (c < n) {
    double lo = 0.0;
    double hi = kMaxPrice;
    std::size_t end = n - 1;
    if (binding(0.0) == n) {
      hi = 0.0;
    } else {
      for (int it = 0; it < 200 && hi - lo > 1e-17 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (binding(mid) == n) hi = mid; else lo = mid;
      }
      end = binding(lo);
      if (end == n) end = n - 1;
    }
    double supply = carry;
    double used = 0.0;
    for (std::size_t k = c; k <= end; ++k) {
      price[k] = hi;
      usage[k] = demand(k, hi);
      supply += energy[k];
      used += block_len * usage[k];
    }
    carry = std::max(supply - used, 0.0);
    c = end + 1;
  }
  return price;
}

}  // namespace

PowerSchedule solve_dc_exact(const RelayInstance& instance) {
  if (!instance.normalized()) throw ContractViolation("solve_dc_exact: instance must be normalized");
  const std::size_t n = instance.n_blocks();
  const double h0 = instance.h0();
  const double b = instance.block_len();
  const auto& es = instance.source_profile().amounts();
  const auto& er = instance.relay_profile().amounts();

  std::vector<double> alpha(n, kMaxPrice);
  std::vector<double> beta(n, 0.0);
  std::vector<double> beta_used = beta;
  for (int iter = 0; iter < 2000; ++iter) {
    std::vector<double> a = nested_prices(
        es, b, [&](std::size_t k, double p) { return block_optimum(h0, p, beta[k]).x; });
    std::vector<double> r = nested_prices(
        er, b, [&](std::size_t k, double p) { return block_optimum(h0, a[k], p).y; });
    double change = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      change = std::max({change, std::abs(a[k] - alpha[k]), std::abs(r[k] - beta[k])});
    }
    beta_used = beta;
    alpha = std::move(a);
    beta = std::move(r);
    if (change < 1e-14) break;
  }

  PowerSchedule out = PowerSchedule::zeros(n);
  for (std::size_t k = 0; k < n; ++k) {
    // Source powers come from the prices they were cleared against so the
    // source budget holds exactly; the relay never exceeds the matched power.
    const double x = block_optimum(h0, alpha[k], beta_used[k]).x;
    const double y = block_optimum(h0, alpha[k], beta[k]).y;
    out.source_power[k] = x;
    out.relay_power[k] = std::min(y, matched_relay_power(x, h0));
  }
  return out;
}

}  // namespace ehrelay
