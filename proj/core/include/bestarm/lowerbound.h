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

// Characteristic time and the fixed-confidence sample-complexity lower bound
// for the Bernoulli projection mu_a = P_a . V of an instance.

#ifndef BESTARM_LOWERBOUND_H_
#define BESTARM_LOWERBOUND_H_

#include <cstdint>
#include <span>
#include <vector>

namespace bestarm {

struct CharacteristicTime {
  double t_star = 0.0;
  std::vector<double> weights;  // optimal sampling proportions, sum to 1
};

// min over a != a* of inf_x [w_a* kl(mu_a*, x) + w_a kl(mu_a, x)], with each
// inner infimum found by ternary search on x in [mu_a, mu_a*].
double allocation_objective(std::span<const double> means,
                            std::span<const double> weights);

// T*(mu) and its optimal weights, by equalising the K-1 pairwise terms and
// solving the resulting scalar equation. Throws ContractViolation for means
// outside (0,1) or K < 2, DegenerateInstance if the best mean is not unique.
CharacteristicTime characteristic_time(std::span<const double> means);

// Independent route: exponentiated subgradient ascent of
// allocation_objective over the weight simplex from `start`.
CharacteristicTime characteristic_time_by_ascent(std::span<const double> means,
                                                 std::span<const double> start,
                                                 int iterations = 20000);

// t_star * kl(delta, 1 - delta).
double sample_complexity_bound(const CharacteristicTime& ct, double delta);

}  // namespace bestarm

#endif  // BESTARM_LOWERBOUND_H_
