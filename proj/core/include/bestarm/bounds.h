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

// Closed-form confidence bonuses and the mean intervals built from them.
//
// All logarithms are natural. The time index t is the total number of
// samples drawn so far across all arms.

#ifndef BESTARM_BOUNDS_H_
#define BESTARM_BOUNDS_H_

#include <cstddef>
#include <cstdint>
#include <span>

#include "bestarm/model.h"

namespace bestarm {

struct BonusContext {
  std::uint64_t t = 1;            // global sample count
  std::size_t num_arms = 2;       // K
  std::size_t num_outcomes = 2;   // d
  double delta = 0.05;            // risk
  std::uint64_t pulls = 1;        // n, pulls of the arm being bounded

  // Throws ContractViolation unless delta in (0,1), t >= 1, pulls >= 1,
  // num_arms >= 1 and num_outcomes >= 1.
  void validate() const;
};

struct MeanInterval {
  double lcb = 0.0;
  double ucb = 0.0;

  double width() const { return ucb - lcb; }
};

// sqrt(ln(2Kt/delta) / 2n). Ignores the support entirely.
double hoeffding_nonstructured(const BonusContext& ctx);

// sqrt(ln(2dKt/delta) / 2n), a per-component bonus on p_i.
double hoeffding_structured(const BonusContext& ctx);

// Empirical Bernstein bonus on one component with variance p(1-p):
//   sqrt(2 p(1-p)) * sqrt(L / 2n) + L / 3n,   L = ln(2dKt/delta).
// Throws ContractViolation unless p_hat in [0,1].
double bernstein_structured(const BonusContext& ctx, double p_hat);

// min(hoeffding_structured, bernstein_structured).
double combined_structured_bonus(const BonusContext& ctx, double p_hat);

// Sum_i clip(p_i -/+ bonus_i, 0, 1) * v_i. Exposed separately so the
// interval geometry can be checked with arbitrary bonuses.
MeanInterval clipped_interval(std::span<const double> p_hat,
                              std::span<const double> v,
                              std::span<const double> bonus);

// Per-component interval with combined_structured_bonus on each p_i.
// Throws NoSamplesError when stats.pulls() == 0.
MeanInterval structured_interval(const ArmStatistics& stats,
                                 const SupportVector& v,
                                 const BonusContext& ctx);

// p_hat . v +/- hoeffding_nonstructured, clipped to [0, 1].
// Throws NoSamplesError when stats.pulls() == 0.
MeanInterval nonstructured_interval(const ArmStatistics& stats,
                                    const SupportVector& v,
                                    const BonusContext& ctx);

}  // namespace bestarm

#endif  // BESTARM_BOUNDS_H_
