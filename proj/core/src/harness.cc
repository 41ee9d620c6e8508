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

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "bestarm/errors.h"
#include "bestarm/harness.h"
#include "bestarm/lowerbound.h"
#include "bestarm/rng.h"

namespace bestarm {
namespace {

// Rows are rescaled to sum to one before validation: the published P^test2
// rows sum to 0.997 and 0.998.
ProblemInstance make_instance(std::string name,
                              std::vector<std::vector<double>> rows,
                              std::vector<double> support) {
  std::vector<SimplexVector> arms;
  arms.reserve(rows.size());
  for (auto& row : rows) {
    double total = 0.0;
    for (double p : row) total += p;
    for (double& p : row) p /= total;
    arms.emplace_back(std::move(row));
  }
  return ProblemInstance(std::move(name), std::move(arms),
                         SupportVector(std::move(support)));
}

std::vector<Scenario> make_builtin_scenarios() {
  const std::vector<std::vector<double>> p_test1 = {
      {0.5, 0.3, 0.2}, {0.4, 0.3, 0.3}, {0.3, 0.2, 0.5}};
  const std::vector<std::vector<double>> p_test2 = {
      {0.142, 0.311, 0.153, 0.391}, {0.386, 0.114, 0.154, 0.344}};
  const std::vector<double> v_test1 = {0.5, 0.1, 0.0};
  const std::vector<double> v_test2 = {0.9, 0.6, 0.4};
  const std::vector<double> v_test3 = {0.144, 0.152, 0.505, 0.984};
  const std::vector<double> v_test4 = {0.573, 0.518, 0.409, 0.505};

  std::vector<Scenario> out;
  out.push_back({"P1V1", make_instance("P1V1", p_test1, v_test1)});
  out.push_back({"P1V2", make_instance("P1V2", p_test1, v_test2)});
  out.push_back({"P2V3", make_instance("P2V3", p_test2, v_test3)});
  out.push_back({"P2V4", make_instance("P2V4", p_test2, v_test4)});
  return out;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

double lower_bound_for(const ProblemInstance& instance, double delta) {
  try {
    return sample_complexity_bound(characteristic_time(instance.means()), delta);
  } catch (const ContractViolation&) {
    // Means at 0 or 1 have no finite characteristic time.
    return std::numeric_limits<double>::quiet_NaN();
  } catch (const DegenerateInstance&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

}  // namespace

const std::vector<Scenario>& builtin_scenarios() {
  static const std::vector<Scenario> scenarios = make_builtin_scenarios();
  return scenarios;
}

const Scenario& find_scenario(std::string_view name) {
  const auto& all = builtin_scenarios();
  const std::string key = lower(name);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (lower(all[i].label) == key || std::to_string(i + 1) == key) return all[i];
  }
  std::string known;
  for (const auto& s : all) known += (known.empty() ? "" : ", ") + s.label;
  throw ValidationError("unknown scenario '" + std::string(name) +
                        "' (known: " + known + ")");
}

const ModeSummary& ExperimentReport::summary(BoundMode mode) const {
  for (const auto& s : summaries) {
    if (s.mode == mode) return s;
  }
  throw ContractViolation("mode '" + std::string(mode_name(mode)) +
                          "' is not part of this report");
}

ModeSummary summarize(BoundMode mode, std::span<const TrialRow> rows) {
  ModeSummary out;
  out.mode = mode;
  std::vector<double> taus;
  for (const TrialRow& r : rows) {
    if (r.mode != mode) continue;
    taus.push_back(static_cast<double>(r.tau));
    if (!r.correct) ++out.errors;
    if (r.truncated) ++out.truncated;
  }
  out.trials = taus.size();
  if (taus.empty()) return out;

  const double n = static_cast<double>(taus.size());
  double sum = 0.0;
  for (double t : taus) sum += t;
  out.mean_tau = sum / n;
  double sq = 0.0;
  for (double t : taus) sq += (t - out.mean_tau) * (t - out.mean_tau);
  out.std_tau = taus.size() > 1 ? std::sqrt(sq / (n - 1.0)) : 0.0;

  std::sort(taus.begin(), taus.end());
  const std::size_t mid = taus.size() / 2;
  out.median_tau = taus.size() % 2 == 1 ? taus[mid] : 0.5 * (taus[mid - 1] + taus[mid]);
  out.min_tau = static_cast<std::uint64_t>(taus.front());
  out.max_tau = static_cast<std::uint64_t>(taus.back());
  out.error_rate = static_cast<double>(out.errors) / n;
  return out;
}

ExperimentReport run_experiment(const Scenario& scenario,
                                std::span<const BoundMode> modes,
                                std::size_t trials, const RunConfig& base,
                                unsigned workers) {
  if (trials < 1) throw ContractViolation("at least one trial is required");
  if (modes.empty()) throw ContractViolation("at least one mode is required");
  base.validate(scenario.instance.num_arms());

  const std::size_t jobs = trials * modes.size();
  std::vector<TrialRow> rows(jobs);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t j = next++; j < jobs; j = next++) {
      try {
        const BoundMode mode = modes[j / trials];
        const std::size_t trial = j % trials;
        RunConfig config = base;
        config.mode = mode;
        config.record_trace = false;
        config.seed = derive_seed(base.seed, static_cast<std::uint64_t>(mode), trial);
        const RunResult result = run(scenario.instance, config);
        rows[j] = {config.seed, mode, trial, result.tau, result.correct,
                   result.truncated};
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = jobs;
      }
    }
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, jobs));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  ExperimentReport report;
  report.scenario = scenario.label;
  report.delta = base.delta;
  report.alpha = base.alpha;
  report.base_seed = base.seed;
  report.rows = std::move(rows);
  for (BoundMode mode : modes) report.summaries.push_back(summarize(mode, report.rows));
  report.lower_bound = lower_bound_for(scenario.instance, base.delta);
  return report;
}

}  // namespace bestarm
