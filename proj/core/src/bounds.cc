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

#include "bestarm/bounds.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bestarm/errors.h"

namespace bestarm {
namespace {

// ln(2 * factor * K * t / delta), the exploration rate shared by all bonuses.
double exploration_log(const BonusContext& ctx, double factor) {
  return std::log(2.0 * factor * static_cast<double>(ctx.num_arms) *
                  static_cast<double>(ctx.t) / ctx.delta);
}

double bernstein_from_log(double log_term, double n, double p_hat) {
  const double variance = p_hat * (1.0 - p_hat);
  return std::sqrt(2.0 * variance) * std::sqrt(log_term / (2.0 * n)) +
         log_term / (3.0 * n);
}

}  // namespace

void BonusContext::validate() const {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw ContractViolation("delta must lie in (0, 1)");
  }
  if (t < 1 || pulls < 1 || num_arms < 1 || num_outcomes < 1) {
    throw ContractViolation("t, n, K and d must all be at least 1");
  }
}

double hoeffding_nonstructured(const BonusContext& ctx) {
  ctx.validate();
  return std::sqrt(exploration_log(ctx, 1.0) /
                   (2.0 * static_cast<double>(ctx.pulls)));
}

double hoeffding_structured(const BonusContext& ctx) {
  ctx.validate();
  return std::sqrt(exploration_log(ctx, static_cast<double>(ctx.num_outcomes)) /
                   (2.0 * static_cast<double>(ctx.pulls)));
}

double bernstein_structured(const BonusContext& ctx, double p_hat) {
  ctx.validate();
  if (!(p_hat >= 0.0 && p_hat <= 1.0)) {
    std::ostringstream msg;
    msg << "empirical probability " << p_hat << " is outside [0, 1]";
    throw ContractViolation(msg.str());
  }
  return bernstein_from_log(
      exploration_log(ctx, static_cast<double>(ctx.num_outcomes)),
      static_cast<double>(ctx.pulls), p_hat);
}

double combined_structured_bonus(const BonusContext& ctx, double p_hat) {
  return std::min(hoeffding_structured(ctx), bernstein_structured(ctx, p_hat));
}

MeanInterval clipped_interval(std::span<const double> p_hat,
                              std::span<const double> v,
                              std::span<const double> bonus) {
  if (p_hat.size() != v.size() || bonus.size() != v.size()) {
    throw ContractViolation("dimension mismatch in interval construction");
  }
  MeanInterval out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.lcb += std::clamp(p_hat[i] - bonus[i], 0.0, 1.0) * v[i];
    out.ucb += std::clamp(p_hat[i] + bonus[i], 0.0, 1.0) * v[i];
  }
  return out;
}

MeanInterval structured_interval(const ArmStatistics& stats,
                                 const SupportVector& v,
                                 const BonusContext& ctx) {
  if (stats.pulls() == 0) throw NoSamplesError();
  ctx.validate();
  if (stats.num_outcomes() != v.size()) {
    throw ContractViolation("dimension mismatch between statistics and support");
  }
  // The Hoeffding bonus and the log term are shared by every component.
  const double n = static_cast<double>(stats.pulls());
  const double log_term =
      exploration_log(ctx, static_cast<double>(ctx.num_outcomes));
  const double hoeffding = std::sqrt(log_term / (2.0 * n));
  const auto counts = stats.counts();
  MeanInterval out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double p = static_cast<double>(counts[i]) / n;
    const double bonus = std::min(hoeffding, bernstein_from_log(log_term, n, p));
    out.lcb += std::clamp(p - bonus, 0.0, 1.0) * v[i];
    out.ucb += std::clamp(p + bonus, 0.0, 1.0) * v[i];
  }
  return out;
}

MeanInterval nonstructured_interval(const ArmStatistics& stats,
                                    const SupportVector& v,
                                    const BonusContext& ctx) {
  if (stats.pulls() == 0) throw NoSamplesError();
  if (stats.num_outcomes() != v.size()) {
    throw ContractViolation("dimension mismatch between statistics and support");
  }
  const double n = static_cast<double>(stats.pulls());
  const auto counts = stats.counts();
  double mean = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    mean += static_cast<double>(counts[i]) / n * v[i];
  }
  const double bonus = hoeffding_nonstructured(ctx);
  return {std::clamp(mean - bonus, 0.0, 1.0), std::clamp(mean + bonus, 0.0, 1.0)};
}

}  // namespace bestarm
