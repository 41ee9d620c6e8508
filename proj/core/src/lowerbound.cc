// Copyright 2026 The bestarm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bestarm/lowerbound.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "bestarm/errors.h"
#include "bestarm/kl.h"

namespace bestarm {
namespace {

constexpr double kTernaryTolerance = 1e-9;

std::size_t checked_best_arm(std::span<const double> means) {
  if (means.size() < 2) {
    throw ContractViolation("the lower bound needs at least two arms");
  }
  for (double m : means) {
    if (!(m > 0.0 && m < 1.0)) {
      throw ContractViolation("Bernoulli means must lie in (0, 1)");
    }
  }
  const auto best = static_cast<std::size_t>(
      std::max_element(means.begin(), means.end()) - means.begin());
  for (std::size_t a = 0; a < means.size(); ++a) {
    if (a != best && means[a] == means[best]) {
      throw DegenerateInstance("best mean is not unique");
    }
  }
  return best;
}

struct PairTerm {
  double value;
  double x;
};

// inf over x in [mu_a, mu_best] of w_best kl(mu_best, x) + w_a kl(mu_a, x).
PairTerm pair_term(double mu_best, double mu_a, double w_best, double w_a) {
  auto f = [&](double x) {
    return w_best * kl_bernoulli(mu_best, x) + w_a * kl_bernoulli(mu_a, x);
  };
  double lo = mu_a;
  double hi = mu_best;
  while (hi - lo > kTernaryTolerance) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (f(m1) <= f(m2)) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  const double x = 0.5 * (lo + hi);
  return {f(x), x};
}

// Bisection for an increasing function on [lo, hi] reaching `target`.
template <typename F>
double solve_increasing(F f, double target, double lo, double hi) {
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Mean of the merged alternative when arm a gets x times the best arm's weight.
double merged_mean(double mu_best, double mu_a, double x) {
  return (mu_best + x * mu_a) / (1.0 + x);
}

// g_a(x) = kl(mu_best, m) + x kl(mu_a, m); increasing from 0 towards
// kl(mu_best, mu_a). Returns the x with g_a(x) = y.
double ratio_for_level(double mu_best, double mu_a, double y) {
  auto g = [&](double x) {
    const double m = merged_mean(mu_best, mu_a, x);
    return kl_bernoulli(mu_best, m) + x * kl_bernoulli(mu_a, m);
  };
  double hi = 1.0;
  while (g(hi) < y && hi < 1e15) hi *= 2.0;
  return solve_increasing(g, y, 0.0, hi);
}

}  // namespace

double allocation_objective(std::span<const double> means,
                            std::span<const double> weights) {
  if (weights.size() != means.size()) {
    throw ContractViolation("one weight per arm is required");
  }
  const std::size_t best = checked_best_arm(means);
  double out = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < means.size(); ++a) {
    if (a == best) continue;
    out = std::min(out, pair_term(means[best], means[a], weights[best], weights[a]).value);
  }
  return out;
}

CharacteristicTime characteristic_time(std::span<const double> means) {
  const std::size_t best = checked_best_arm(means);
  const double mu_best = means[best];

  // At the optimum every pairwise term equals the same level y, and the
  // level is fixed by sum_a kl(mu_best, m_a) / kl(mu_a, m_a) = 1.
  double y_max = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < means.size(); ++a) {
    if (a != best) y_max = std::min(y_max, kl_bernoulli(mu_best, means[a]));
  }
  auto ratio_sum = [&](double y) {
    double total = 0.0;
    for (std::size_t a = 0; a < means.size(); ++a) {
      if (a == best) continue;
      const double m = merged_mean(mu_best, means[a], ratio_for_level(mu_best, means[a], y));
      total += kl_bernoulli(mu_best, m) / kl_bernoulli(means[a], m);
    }
    return total;
  };
  const double y = solve_increasing(ratio_sum, 1.0, 0.0, y_max);

  CharacteristicTime out;
  out.weights.assign(means.size(), 0.0);
  double total = 1.0;
  for (std::size_t a = 0; a < means.size(); ++a) {
    if (a == best) continue;
    out.weights[a] = ratio_for_level(mu_best, means[a], y);
    total += out.weights[a];
  }
  out.weights[best] = 1.0;
  for (double& w : out.weights) w /= total;
  out.t_star = 1.0 / (out.weights[best] * y);
  return out;
}

CharacteristicTime characteristic_time_by_ascent(std::span<const double> means,
                                                 std::span<const double> start,
                                                 int iterations) {
  const std::size_t best = checked_best_arm(means);
  const std::size_t num_arms = means.size();
  if (start.size() != num_arms) {
    throw ContractViolation("one starting weight per arm is required");
  }
  // A little uniform mass keeps every coordinate alive under the
  // multiplicative update.
  std::vector<double> w(num_arms);
  const double start_total = std::accumulate(start.begin(), start.end(), 0.0);
  for (std::size_t a = 0; a < num_arms; ++a) {
    w[a] = 0.99 * start[a] / start_total + 0.01 / static_cast<double>(num_arms);
  }

  std::vector<double> best_w = w;
  double best_value = -1.0;
  std::vector<double> grad(num_arms);
  for (int k = 1; k <= iterations; ++k) {
    double value = std::numeric_limits<double>::infinity();
    std::fill(grad.begin(), grad.end(), 0.0);
    for (std::size_t a = 0; a < num_arms; ++a) {
      if (a == best) continue;
      const PairTerm term = pair_term(means[best], means[a], w[best], w[a]);
      if (term.value < value) {
        value = term.value;
        std::fill(grad.begin(), grad.end(), 0.0);
        grad[best] = kl_bernoulli(means[best], term.x);
        grad[a] = kl_bernoulli(means[a], term.x);
      }
    }
    if (value > best_value) {
      best_value = value;
      best_w = w;
    }
    const double scale = *std::max_element(grad.begin(), grad.end());
    if (!(scale > 0.0)) break;
    const double step = 0.5 / std::sqrt(static_cast<double>(k));
    double total = 0.0;
    for (std::size_t a = 0; a < num_arms; ++a) {
      w[a] *= std::exp(step * grad[a] / scale);
      total += w[a];
    }
    for (double& x : w) x /= total;
  }
  return {1.0 / best_value, best_w};
}

double sample_complexity_bound(const CharacteristicTime& ct, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw ContractViolation("delta must lie in (0, 1)");
  }
  return ct.t_star * kl_bernoulli(delta, 1.0 - delta);
}

}  // namespace bestarm
