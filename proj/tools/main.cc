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

// bestarm: command-line front end for the best-arm identification harness.
//
//   bestarm run --config exp.json [--workers W] [--out DIR]
//   bestarm run --scenario P1V1 --mode structured,el --trials 100 --delta 0.05
//               --seed 1 --out results/ [--alpha A] [--epsilon E]
//               [--max-steps M] [--workers W] [--bins B]
//   bestarm scenarios list
//   bestarm lowerbound --scenario P1V1 --delta 0.05
//   bestarm trace --scenario P1V1 --mode el --delta 0.05 --seed 1 --out t.csv

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bestarm/engine.h"
#include "bestarm/errors.h"
#include "bestarm/harness.h"
#include "bestarm/lowerbound.h"

namespace {

using namespace bestarm;

std::vector<BoundMode> parse_modes(const std::string& list) {
  std::vector<BoundMode> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const BoundMode mode = parse_mode(item);
    if (std::find(out.begin(), out.end(), mode) != out.end()) {
      throw ValidationError("--mode: duplicate mode '" + item + "'");
    }
    out.push_back(mode);
  }
  if (out.empty()) throw ValidationError("--mode: no modes given");
  return out;
}

void print_report(const ExperimentReport& report) {
  std::cout << "scenario " << report.scenario << "  delta " << report.delta
            << "  alpha " << report.alpha << "  seed " << report.base_seed << '\n';
  std::cout << std::left << std::setw(15) << "mode" << std::right << std::setw(8)
            << "trials" << std::setw(13) << "mean tau" << std::setw(12) << "std"
            << std::setw(12) << "median" << std::setw(10) << "min" << std::setw(10)
            << "max" << std::setw(9) << "errors" << std::setw(7) << "trunc" << '\n';
  std::cout << std::fixed;
  for (const ModeSummary& s : report.summaries) {
    std::cout << std::left << std::setw(15) << mode_name(s.mode) << std::right
              << std::setw(8) << s.trials << std::setw(13) << std::setprecision(1)
              << s.mean_tau << std::setw(12) << s.std_tau << std::setw(12)
              << s.median_tau << std::setw(10) << s.min_tau << std::setw(10)
              << s.max_tau << std::setw(9) << s.errors << std::setw(7)
              << s.truncated << '\n';
    if (s.truncated > 0) {
      std::cerr << "warning: " << s.truncated << " " << mode_name(s.mode)
                << " run(s) hit max_steps\n";
    }
  }
  if (std::isfinite(report.lower_bound)) {
    std::cout << "lower bound  T*(mu) kl(delta, 1-delta) = " << std::setprecision(1)
              << report.lower_bound << '\n';
  }
  std::cout.unsetf(std::ios::floatfield);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fixed-confidence best-arm identification over multinomial arms "
               "with known support"};
  app.require_subcommand(1);

  // run
  CLI::App* run_cmd = app.add_subcommand("run", "Run seeded trials and write reports");
  std::string config_path;
  std::string scenario_name;
  std::string modes_arg;
  std::size_t trials = 0;
  double delta = 0.0;
  std::uint64_t seed = 0;
  std::string out_dir;
  double alpha = 0.5;
  double epsilon = 0.0;
  std::uint64_t max_steps = RunConfig{}.max_steps;
  unsigned workers = 0;
  std::size_t bins = kDefaultHistogramBins;
  auto* config_opt = run_cmd->add_option("--config", config_path, "JSON experiment file");
  auto* scenario_opt = run_cmd->add_option("--scenario", scenario_name, "Builtin scenario");
  auto* mode_opt = run_cmd->add_option("--mode", modes_arg,
                                       "Comma-separated: nonstructured,structured,el");
  auto* trials_opt = run_cmd->add_option("--trials", trials, "Trials per mode")
                         ->check(CLI::PositiveNumber);
  auto* delta_opt = run_cmd->add_option("--delta", delta, "Risk level in (0,1)");
  auto* seed_opt = run_cmd->add_option("--seed", seed, "Base seed");
  auto* out_opt = run_cmd->add_option("--out", out_dir, "Output directory");
  auto* alpha_opt = run_cmd->add_option("--alpha", alpha, "Leader sampling probability");
  auto* eps_opt = run_cmd->add_option("--epsilon", epsilon, "Stopping slack");
  auto* steps_opt = run_cmd->add_option("--max-steps", max_steps, "Sample cap per run");
  run_cmd->add_option("--workers", workers, "Worker threads (0 = all cores)");
  run_cmd->add_option("--bins", bins, "Histogram bins")->check(CLI::PositiveNumber);
  for (CLI::Option* opt : {scenario_opt, mode_opt, trials_opt, delta_opt, seed_opt,
                           alpha_opt, eps_opt, steps_opt}) {
    config_opt->excludes(opt);
  }

  // scenarios list
  CLI::App* scenarios_cmd = app.add_subcommand("scenarios", "Builtin scenarios");
  scenarios_cmd->require_subcommand(1);
  CLI::App* list_cmd = scenarios_cmd->add_subcommand("list", "List builtin scenarios");

  // lowerbound
  CLI::App* lb_cmd = app.add_subcommand("lowerbound", "Sample-complexity lower bound");
  std::string lb_scenario;
  double lb_delta = 0.0;
  lb_cmd->add_option("--scenario", lb_scenario, "Builtin scenario")->required();
  lb_cmd->add_option("--delta", lb_delta, "Risk level in (0,1)")->required();

  // trace
  CLI::App* trace_cmd = app.add_subcommand("trace", "Write the per-step trace of one run");
  std::string tr_scenario;
  std::string tr_mode;
  double tr_delta = 0.0;
  std::uint64_t tr_seed = 0;
  double tr_alpha = 0.5;
  std::string tr_out;
  trace_cmd->add_option("--scenario", tr_scenario, "Builtin scenario")->required();
  trace_cmd->add_option("--mode", tr_mode, "Bound mode")->required();
  trace_cmd->add_option("--delta", tr_delta, "Risk level in (0,1)")->required();
  trace_cmd->add_option("--seed", tr_seed, "Run seed")->required();
  trace_cmd->add_option("--alpha", tr_alpha, "Leader sampling probability");
  trace_cmd->add_option("--out", tr_out, "CSV destination (stdout if omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) {
      ExperimentSpec spec = [&] {
        if (!config_path.empty()) return load_config(config_path);
        for (auto [opt, name] : {std::pair{scenario_opt, "--scenario"}, {mode_opt, "--mode"},
                                 {trials_opt, "--trials"}, {delta_opt, "--delta"},
                                 {seed_opt, "--seed"}, {out_opt, "--out"}}) {
          if (opt->count() == 0) {
            throw ValidationError(std::string(name) + ": required without --config");
          }
        }
        if (!(delta > 0.0 && delta < 1.0)) throw ValidationError("--delta: must lie in (0, 1)");
        if (!(alpha >= 0.0 && alpha <= 1.0)) throw ValidationError("--alpha: must lie in [0, 1]");
        if (!(epsilon >= 0.0)) throw ValidationError("--epsilon: must be nonnegative");
        const Scenario& scenario = find_scenario(scenario_name);
        if (max_steps < scenario.instance.num_arms()) {
          throw ValidationError("--max-steps: must be at least the number of arms");
        }
        RunConfig config;
        config.delta = delta;
        config.alpha = alpha;
        config.epsilon_slack = epsilon;
        config.max_steps = max_steps;
        config.seed = seed;
        return ExperimentSpec{.scenario = scenario,
                              .config = config,
                              .trials = trials,
                              .modes = parse_modes(modes_arg),
                              .output_dir = out_dir};
      }();
      if (!config_path.empty() && out_opt->count() > 0) spec.output_dir = out_dir;

      const ExperimentReport report =
          run_experiment(spec.scenario, spec.modes, spec.trials, spec.config, workers);
      emit_report(report, spec.output_dir, bins);
      print_report(report);
      std::cout << "wrote " << spec.output_dir.string() << '\n';
    } else if (*scenarios_cmd && *list_cmd) {
      for (const Scenario& s : builtin_scenarios()) {
        const ProblemInstance& inst = s.instance;
        std::cout << s.label << "  K=" << inst.num_arms() << " d=" << inst.num_outcomes()
                  << "  best arm " << inst.best_arm() << "  means";
        for (double m : inst.means()) std::cout << ' ' << std::setprecision(6) << m;
        std::cout << "  V =";
        for (double v : inst.support().values()) std::cout << ' ' << v;
        std::cout << '\n';
      }
    } else if (*lb_cmd) {
      if (!(lb_delta > 0.0 && lb_delta < 1.0)) {
        throw ValidationError("--delta: must lie in (0, 1)");
      }
      const Scenario& s = find_scenario(lb_scenario);
      const CharacteristicTime ct = characteristic_time(s.instance.means());
      std::cout << std::setprecision(10) << "scenario " << s.label << '\n'
                << "t_star " << ct.t_star << '\n'
                << "weights";
      for (double w : ct.weights) std::cout << ' ' << w;
      std::cout << '\n'
                << "lower_bound " << sample_complexity_bound(ct, lb_delta) << '\n';
    } else if (*trace_cmd) {
      const Scenario& s = find_scenario(tr_scenario);
      RunConfig config;
      config.delta = tr_delta;
      config.alpha = tr_alpha;
      config.seed = tr_seed;
      config.mode = parse_mode(tr_mode);
      config.record_trace = true;
      config.validate(s.instance.num_arms());
      const RunResult result = run(s.instance, config);
      if (tr_out.empty()) {
        write_trace_csv(std::cout, result.trace);
      } else {
        std::ofstream out(tr_out);
        if (!out) throw IoError("cannot open '" + tr_out + "' for writing");
        write_trace_csv(out, result.trace);
        if (!out) throw IoError("failed writing '" + tr_out + "'");
      }
      std::cerr << "recommended arm " << result.recommended << " after " << result.tau
                << " samples" << (result.truncated ? " (truncated)" : "") << '\n';
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
