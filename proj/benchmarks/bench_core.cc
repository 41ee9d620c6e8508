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

#include <benchmark/benchmark.h>

#include "bestarm/bounds.h"
#include "bestarm/engine.h"
#include "bestarm/harness.h"
#include "bestarm/kl.h"

namespace bestarm {
namespace {

ArmStatistics observed(std::size_t d, std::uint64_t n) {
  ArmStatistics stats(d);
  for (std::uint64_t i = 0; i < n; ++i) stats.update(i % d);
  return stats;
}

void BM_StructuredInterval(benchmark::State& state) {
  const SupportVector v({0.5, 0.1, 0.0});
  const ArmStatistics stats = observed(3, 1000);
  const BonusContext ctx{.t = 5000, .num_arms = 3, .num_outcomes = 3, .delta = 0.05,
                         .pulls = 1000};
  for (auto _ : state) benchmark::DoNotOptimize(structured_interval(stats, v, ctx));
}
BENCHMARK(BM_StructuredInterval);

void BM_ElUpper(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  std::vector<double> p(d, 1.0 / d);
  std::vector<double> v(d);
  for (std::size_t i = 0; i < d; ++i) v[i] = static_cast<double>(i) / (d - 1);
  const KlBall ball{SimplexVector(p), 0.01};
  const SupportVector sv(v);
  for (auto _ : state) benchmark::DoNotOptimize(el_upper(ball, sv));
}
BENCHMARK(BM_ElUpper)->Arg(3)->Arg(10)->Arg(100);

void BM_KlinfUpper(benchmark::State& state) {
  const SimplexVector p({0.5, 0.3, 0.2});
  const SupportVector v({0.5, 0.1, 0.0});
  for (auto _ : state) benchmark::DoNotOptimize(klinf_upper(p, v, 0.35));
}
BENCHMARK(BM_KlinfUpper);

void BM_SingleRun(benchmark::State& state) {
  const BoundMode mode = static_cast<BoundMode>(state.range(0));
  const Scenario& s = find_scenario("P1V1");
  RunConfig config;
  config.mode = mode;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    config.seed = ++seed;
    benchmark::DoNotOptimize(run(s.instance, config));
  }
  state.SetLabel(std::string(mode_name(mode)));
}
BENCHMARK(BM_SingleRun)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace bestarm

BENCHMARK_MAIN();
