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

#include "bestarm/harness.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "bestarm/errors.h"

namespace bestarm {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("bestarm_test_" + name);
  fs::remove_all(dir);
  return dir;
}

TEST(ScenarioTest, BuiltinRegistry) {
  const auto& all = builtin_scenarios();
  ASSERT_EQ(all.size(), 4u);
  const auto& s1 = all[0].instance;
  EXPECT_EQ(s1.best_arm(), 0u);
  EXPECT_NEAR(s1.means()[0], 0.28, 1e-12);
  EXPECT_NEAR(s1.means()[1], 0.23, 1e-12);
  EXPECT_NEAR(s1.means()[2], 0.17, 1e-12);
  EXPECT_NEAR(std::abs(all[2].instance.means()[0] - all[2].instance.means()[1]), 0.04, 5e-3);
  EXPECT_NEAR(std::abs(all[3].instance.means()[0] - all[3].instance.means()[1]), 0.014, 5e-3);
  EXPECT_EQ(all[3].instance.best_arm(), 1u);
  EXPECT_EQ(all[1].instance.support(), SupportVector({0.9, 0.6, 0.4}));
}

TEST(ScenarioTest, Lookup) {
  EXPECT_EQ(&find_scenario("p1v2"), &builtin_scenarios()[1]);
  EXPECT_EQ(&find_scenario("3"), &builtin_scenarios()[2]);
  EXPECT_THROW(find_scenario("P9V9"), ValidationError);
}

TEST(SummaryTest, Statistics) {
  std::vector<TrialRow> rows;
  const std::uint64_t taus[] = {10, 20, 30, 40};
  for (std::size_t i = 0; i < 4; ++i) {
    rows.push_back({.seed = i, .mode = BoundMode::kStructured, .trial = i,
                    .tau = taus[i], .correct = i != 2, .truncated = i == 3});
  }
  rows.push_back({.seed = 9, .mode = BoundMode::kNonStructured, .trial = 0, .tau = 99,
                  .correct = true, .truncated = false});
  const ModeSummary s = summarize(BoundMode::kStructured, rows);
  EXPECT_EQ(s.trials, 4u);
  EXPECT_DOUBLE_EQ(s.mean_tau, 25.0);
  EXPECT_NEAR(s.std_tau, std::sqrt(500.0 / 3.0), 1e-12);
  EXPECT_DOUBLE_EQ(s.median_tau, 25.0);
  EXPECT_EQ(s.min_tau, 10u);
  EXPECT_EQ(s.max_tau, 40u);
  EXPECT_EQ(s.errors, 1u);
  EXPECT_DOUBLE_EQ(s.error_rate, 0.25);
  EXPECT_EQ(s.truncated, 1u);
}

TEST(HistogramTest, CountsSumAndEdges) {
  const std::vector<std::uint64_t> taus = {5, 7, 7, 10, 15, 15};
  const auto bins = histogram(taus, 4);
  ASSERT_EQ(bins.size(), 4u);
  std::size_t total = 0;
  for (const auto& b : bins) total += b.count;
  EXPECT_EQ(total, taus.size());
  EXPECT_DOUBLE_EQ(bins.front().lo, 5.0);
  EXPECT_DOUBLE_EQ(bins.back().hi, 15.0);
  EXPECT_EQ(bins.back().count, 2u);

  const std::vector<std::uint64_t> same = {8, 8, 8};
  EXPECT_EQ(histogram(same, 5)[0].count, 3u);
  EXPECT_THROW(histogram(same, 0), ContractViolation);
}

TEST(ExperimentTest, RowsSeedsAndReports) {
  const Scenario& s = find_scenario("P1V1");
  RunConfig base;
  base.seed = 17;
  const BoundMode modes[] = {BoundMode::kStructured, BoundMode::kEmpiricalLikelihood};
  const ExperimentReport r = run_experiment(s, modes, 12, base, 1);
  ASSERT_EQ(r.rows.size(), 24u);
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const TrialRow& row = r.rows[i];
    EXPECT_EQ(row.mode, modes[i / 12]);
    EXPECT_EQ(row.trial, i % 12);
    EXPECT_EQ(row.seed, derive_seed(17, static_cast<std::uint64_t>(row.mode), row.trial));
  }
  ASSERT_EQ(r.summaries.size(), 2u);
  for (const ModeSummary& m : r.summaries) {
    EXPECT_EQ(m.trials, 12u);
    std::size_t wrong = 0;
    for (const TrialRow& row : r.rows) wrong += row.mode == m.mode && !row.correct;
    EXPECT_DOUBLE_EQ(m.error_rate, wrong / 12.0);
  }
  EXPECT_NEAR(r.lower_bound, 1696.6, 0.5);
}

TEST(ExperimentTest, WorkerCountDoesNotChangeOutput) {
  const Scenario& s = find_scenario("P2V3");
  RunConfig base;
  base.seed = 3;
  const BoundMode modes[] = {BoundMode::kEmpiricalLikelihood, BoundMode::kNonStructured};
  const ExperimentReport one = run_experiment(s, modes, 6, base, 1);
  const ExperimentReport four = run_experiment(s, modes, 6, base, 4);
  std::ostringstream a, b;
  write_trials_csv(a, one);
  write_trials_csv(b, four);
  EXPECT_EQ(a.str(), b.str());
}

TEST(ExperimentTest, TruncationIsCountedNotDropped) {
  RunConfig base;
  base.max_steps = 100;
  const BoundMode modes[] = {BoundMode::kNonStructured};
  const ExperimentReport r = run_experiment(find_scenario("P2V4"), modes, 5, base, 1);
  EXPECT_EQ(r.summaries[0].trials, 5u);
  EXPECT_EQ(r.summaries[0].truncated, 5u);
}

TEST(EmitReportTest, WritesAllFiles) {
  const fs::path dir = scratch_dir("emit");
  RunConfig base;
  base.seed = 1;
  const BoundMode modes[] = {BoundMode::kNonStructured, BoundMode::kStructured};
  const ExperimentReport r = run_experiment(find_scenario("P1V1"), modes, 100, base);
  emit_report(r, dir, 20);

  std::istringstream csv(slurp(dir / "trials.csv"));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "seed,mode,scenario,tau,correct,truncated");
  std::map<std::string, int> per_mode;
  while (std::getline(csv, line)) {
    const auto first = line.find(',');
    const auto second = line.find(',', first + 1);
    ++per_mode[line.substr(first + 1, second - first - 1)];
  }
  EXPECT_EQ(per_mode["nonstructured"], 100);
  EXPECT_EQ(per_mode["structured"], 100);

  for (const char* mode : {"nonstructured", "structured"}) {
    std::istringstream hist(slurp(dir / (std::string("histogram_") + mode + ".csv")));
    std::getline(hist, line);
    EXPECT_EQ(line, "bin_lo,bin_hi,count");
    int bins = 0;
    std::size_t total = 0;
    while (std::getline(hist, line)) {
      ++bins;
      total += std::stoul(line.substr(line.rfind(',') + 1));
    }
    EXPECT_EQ(bins, 20);
    EXPECT_EQ(total, 100u);
  }

  const auto summary = nlohmann::json::parse(slurp(dir / "summary.json"));
  EXPECT_EQ(summary["scenario"], "P1V1");
  EXPECT_EQ(summary["modes"].size(), 2u);
  EXPECT_EQ(summary["modes"][1]["mode"], "structured");
  EXPECT_DOUBLE_EQ(summary["modes"][1]["mean_tau"].get<double>(), r.summaries[1].mean_tau);
  fs::remove_all(dir);
}

TEST(EmitReportTest, SameSeedSameBytes) {
  const fs::path a = scratch_dir("bytes_a");
  const fs::path b = scratch_dir("bytes_b");
  RunConfig base;
  base.seed = 77;
  const BoundMode modes[] = {BoundMode::kEmpiricalLikelihood};
  emit_report(run_experiment(find_scenario("P1V2"), modes, 20, base), a);
  emit_report(run_experiment(find_scenario("P1V2"), modes, 20, base), b);
  EXPECT_EQ(slurp(a / "trials.csv"), slurp(b / "trials.csv"));
  EXPECT_EQ(slurp(a / "summary.json"), slurp(b / "summary.json"));
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST(EmitReportTest, UnwritableDestinationNamesPath) {
  const fs::path blocker = scratch_dir("blocker");
  std::ofstream(blocker) << "not a directory";
  RunConfig base;
  const BoundMode modes[] = {BoundMode::kStructured};
  const ExperimentReport r = run_experiment(find_scenario("P1V1"), modes, 1, base);
  try {
    emit_report(r, blocker / "sub");
    FAIL() << "expected IoError";
  } catch (const IoError& e) {
    EXPECT_NE(std::string(e.what()).find(blocker.string()), std::string::npos);
  }
  fs::remove_all(blocker);
}

constexpr const char* kScenario1Config = R"({
  "name": "P1V1",
  "P": [[0.5, 0.3, 0.2], [0.4, 0.3, 0.3], [0.3, 0.2, 0.5]],
  "V": [0.5, 0.1, 0],
  "delta": 0.05,
  "alpha": 0.5,
  "epsilon_slack": 0,
  "trials": 100,
  "seed": 1,
  "modes": ["nonstructured", "structured", "el"],
  "max_steps": 1e7,
  "output_dir": "results/p1v1"
})";

TEST(ConfigTest, RoundTripsBuiltinScenario) {
  const ExperimentSpec spec = parse_config(kScenario1Config);
  EXPECT_EQ(spec.scenario.instance, builtin_scenarios()[0].instance);
  EXPECT_EQ(spec.scenario.label, "P1V1");
  EXPECT_DOUBLE_EQ(spec.config.delta, 0.05);
  EXPECT_EQ(spec.config.max_steps, 10'000'000u);
  EXPECT_EQ(spec.trials, 100u);
  EXPECT_EQ(spec.modes.size(), 3u);
  EXPECT_EQ(spec.output_dir, fs::path("results/p1v1"));
}

TEST(ConfigTest, DefaultsAndBuiltinReference) {
  const ExperimentSpec spec = parse_config(R"({"scenario": "P2V4", "delta": 0.1})");
  EXPECT_EQ(spec.scenario.instance, builtin_scenarios()[3].instance);
  EXPECT_DOUBLE_EQ(spec.config.alpha, 0.5);
  EXPECT_DOUBLE_EQ(spec.config.epsilon_slack, 0.0);
  EXPECT_EQ(spec.modes.size(), 3u);
}

void expect_validation_error(const std::string& text, const std::string& needle) {
  try {
    parse_config(text);
    FAIL() << "expected ValidationError mentioning " << needle;
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
  }
}

TEST(ConfigTest, ValidationErrorsNameTheKey) {
  expect_validation_error(R"({"P": [[0.5, 0.5], [0.5, 0.49]], "V": [0, 1], "delta": 0.05})",
                          "P[1]");
  expect_validation_error(R"({"P": [[0.5, 0.5], [0.2, 0.8]], "V": [0, 1]})", "delta");
  expect_validation_error(R"({"P": [[0.5, 0.5], [0.2, 0.8]], "V": [0, 1], "delta": 1.5})",
                          "delta");
  expect_validation_error(R"({"P": [[0.5, 0.5], [0.2, 0.3, 0.5]], "V": [0, 1], "delta": 0.1})",
                          "P[1]");
  expect_validation_error(R"({"P": [[0.5, 0.5], [0.2, 0.8]], "V": [0, 2], "delta": 0.1})",
                          "V");
  expect_validation_error(R"({"P": [[0.5, 0.5], [0.5, 0.5]], "V": [0, 1], "delta": 0.1})",
                          "P");
  expect_validation_error(R"({"scenario": "P1V1", "delta": 0.1, "modes": ["ucb"]})", "modes");
  expect_validation_error(R"({"scenario": "P1V1", "delta": 0.1, "detla": 0.1})", "detla");
  expect_validation_error(R"({"scenario": "P1V1", "delta": 0.1, "max_steps": 2})",
                          "max_steps");
  expect_validation_error(R"({"scenario": "P1V1", "delta": 0.1, "trials": 0})", "trials");
  expect_validation_error("{not json", "JSON");
}

TEST(ConfigTest, LoadFromFile) {
  const fs::path dir = scratch_dir("config");
  fs::create_directories(dir);
  std::ofstream(dir / "exp.json") << kScenario1Config;
  EXPECT_EQ(load_config(dir / "exp.json").scenario.instance, builtin_scenarios()[0].instance);
  EXPECT_THROW(load_config(dir / "missing.json"), IoError);
  fs::remove_all(dir);
}

}  // namespace
}  // namespace bestarm
