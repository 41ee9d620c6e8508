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

#include <gtest/gtest.h>

#include <cmath>

#include "bestarm/errors.h"
#include "bestarm/kl.h"
#include "bestarm/rng.h"
#include "oracles.h"

namespace bestarm {
namespace {

TEST(CharacteristicTimeTest, TwoArmsMatchGrid) {
  const std::vector<double> mu = {0.6, 0.4};
  const CharacteristicTime ct = characteristic_time(mu);
  const double grid = oracle::grid_inverse_characteristic_time(mu, 1e-3);
  EXPECT_NEAR(1.0 / ct.t_star, grid, 0.01 * grid);
  EXPECT_GE(1.0 / ct.t_star, grid - 1e-3);
  EXPECT_NEAR(ct.weights[0] + ct.weights[1], 1.0, 1e-12);
}

TEST(CharacteristicTimeTest, SymmetricWeights) {
  for (double gap : {0.05, 0.1, 0.3}) {
    const std::vector<double> mu = {0.5 + gap, 0.5 - gap};
    const CharacteristicTime ct = characteristic_time(mu);
    EXPECT_NEAR(ct.weights[0], 0.5, 1e-2) << gap;
    EXPECT_NEAR(ct.weights[1], 0.5, 1e-2) << gap;
  }
}

TEST(CharacteristicTimeTest, ThreeArmsAgreeAcrossRoutes) {
  const std::vector<double> mu = {0.28, 0.23, 0.17};
  const CharacteristicTime ct = characteristic_time(mu);
  const std::vector<double> uniform = {1.0, 1.0, 1.0};
  RandomStream rng(6);
  std::vector<double> random_start(3);
  for (double& w : random_start) w = 0.05 + rng.uniform();
  const CharacteristicTime from_uniform = characteristic_time_by_ascent(mu, uniform);
  const CharacteristicTime from_random = characteristic_time_by_ascent(mu, random_start);
  EXPECT_NEAR(from_uniform.t_star, ct.t_star, 0.01 * ct.t_star);
  EXPECT_NEAR(from_random.t_star, ct.t_star, 0.01 * ct.t_star);
  EXPECT_NEAR(from_uniform.t_star, from_random.t_star, 0.01 * ct.t_star);
}

// Sandwich against the brute-force grid: never below it by more than the
// grid's resolution, never more than 1% above.
TEST(CharacteristicTimeTest, SandwichAgainstGrid) {
  const std::vector<std::vector<double>> cases = {
      {0.28, 0.23, 0.17}, {0.71, 0.66, 0.59}, {0.3, 0.5}, {0.9, 0.2, 0.6}};
  for (const auto& mu : cases) {
    const double step = mu.size() == 2 ? 1e-3 : 2e-3;
    const double grid = oracle::grid_inverse_characteristic_time(mu, step);
    const double value = 1.0 / characteristic_time(mu).t_star;
    EXPECT_GE(value, grid - 1e-3);
    EXPECT_LE(value, grid * 1.01);
  }
}

TEST(CharacteristicTimeTest, WeightsAchieveReportedValue) {
  for (const std::vector<double>& mu :
       {std::vector<double>{0.28, 0.23, 0.17}, std::vector<double>{0.2, 0.8, 0.75, 0.5}}) {
    const CharacteristicTime ct = characteristic_time(mu);
    const double achieved = allocation_objective(mu, ct.weights);
    EXPECT_NEAR(achieved, 1.0 / ct.t_star, 0.01 / ct.t_star);
  }
}

TEST(CharacteristicTimeTest, ExtraArmMakesItHarder) {
  const std::vector<double> two = {0.28, 0.23};
  const std::vector<double> three = {0.28, 0.23, 0.02};
  EXPECT_GT(characteristic_time(three).t_star, characteristic_time(two).t_star);
}

TEST(CharacteristicTimeTest, InvalidInput) {
  EXPECT_THROW(characteristic_time(std::vector<double>{0.4, 0.4}), DegenerateInstance);
  EXPECT_THROW(characteristic_time(std::vector<double>{1.0, 0.4}), ContractViolation);
  EXPECT_THROW(characteristic_time(std::vector<double>{0.4}), ContractViolation);
}

TEST(SampleComplexityBoundTest, Values) {
  const CharacteristicTime ct = characteristic_time(std::vector<double>{0.6, 0.4});
  EXPECT_NEAR(sample_complexity_bound(ct, 0.05), ct.t_star * 2.649995081249795, 1e-9);
  EXPECT_DOUBLE_EQ(sample_complexity_bound(ct, 0.5), 0.0);
  double previous = sample_complexity_bound(ct, 0.001);
  for (double delta : {0.01, 0.05, 0.1, 0.3, 0.49}) {
    const double b = sample_complexity_bound(ct, delta);
    EXPECT_LT(b, previous);
    previous = b;
  }
  EXPECT_THROW(sample_complexity_bound(ct, 1.0), ContractViolation);
}

}  // namespace
}  // namespace bestarm
