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

// Benchmark harness: scenario registry, seeded parallel trials, summaries and
// plot-ready output files.

#ifndef BESTARM_HARNESS_H_
#define BESTARM_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bestarm/engine.h"
#include "bestarm/model.h"

namespace bestarm {

struct Scenario {
  std::string label;
  ProblemInstance instance;
};

// The four reference scenarios, in order:
//   P1V1  P^test1 with V^test1
//   P1V2  P^test1 with V^test2
//   P2V3  P^test2 with V^test3
//   P2V4  P^test2 with V^test4
const std::vector<Scenario>& builtin_scenarios();

// Looks up a builtin scenario by label (case-insensitive) or 1-based
// position. Throws ValidationError.
const Scenario& find_scenario(std::string_view name);

struct TrialRow {
  std::uint64_t seed = 0;
  BoundMode mode = BoundMode::kStructured;
  std::size_t trial = 0;
  std::uint64_t tau = 0;
  bool correct = false;
  bool truncated = false;
};

struct ModeSummary {
  BoundMode mode = BoundMode::kStructured;
  std::size_t trials = 0;
  double mean_tau = 0.0;
  double std_tau = 0.0;  // sample standard deviation
  double median_tau = 0.0;
  std::uint64_t min_tau = 0;
  std::uint64_t max_tau = 0;
  std::size_t errors = 0;
  double error_rate = 0.0;
  std::size_t truncated = 0;
};

struct ExperimentReport {
  std::string scenario;
  double delta = 0.0;
  double alpha = 0.0;
  std::uint64_t base_seed = 0;
  std::vector<ModeSummary> summaries;  // in the requested mode order
  std::vector<TrialRow> rows;          // grouped by mode, then trial index
  double lower_bound = 0.0;            // T*(mu) kl(delta, 1 - delta)

  const ModeSummary& summary(BoundMode mode) const;
};

ModeSummary summarize(BoundMode mode, std::span<const TrialRow> rows);

// Runs trials x modes independent runs. Trial i of mode m uses seed
// derive_seed(base.seed, m, i). workers == 0 means hardware concurrency.
// Output does not depend on the worker count.
ExperimentReport run_experiment(const Scenario& scenario,
                                std::span<const BoundMode> modes,
                                std::size_t trials, const RunConfig& base,
                                unsigned workers = 0);

inline constexpr std::size_t kDefaultHistogramBins = 20;

// Writes into dir (created if needed):
//   trials.csv                seed,mode,scenario,tau,correct,truncated
//   summary.json
//   histogram_<mode>.csv      bin_lo,bin_hi,count
// Throws IoError naming the path on failure.
void emit_report(const ExperimentReport& report,
                 const std::filesystem::path& dir,
                 std::size_t histogram_bins = kDefaultHistogramBins);

// The individual writers, for callers that want streams.
void write_trials_csv(std::ostream& out, const ExperimentReport& report);
void write_summary_json(std::ostream& out, const ExperimentReport& report);

struct HistogramBin {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t count = 0;
};

// Equal-width bins over [min tau, max tau]; the last bin is closed.
std::vector<HistogramBin> histogram(std::span<const std::uint64_t> taus,
                                    std::size_t bins);

struct ExperimentSpec {
  Scenario scenario;
  RunConfig config;
  std::size_t trials = 100;
  std::vector<BoundMode> modes;
  std::filesystem::path output_dir = "out";
};

// Parses a JSON experiment file. Required keys: P, V, delta. Optional: name,
// alpha (0.5), epsilon_slack (0), trials (100), seed (0), modes (all three),
// max_steps (1e7), el_radius_scale (1), output_dir ("out").
ExperimentSpec parse_config(std::string_view text);
// Reads and parses a file; IoError if unreadable.
ExperimentSpec load_config(const std::filesystem::path& path);

}  // namespace bestarm

#endif  // BESTARM_HARNESS_H_
