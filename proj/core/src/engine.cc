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

#include "bestarm/engine.h"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>

#include "bestarm/errors.h"
#include "bestarm/kl.h"

namespace bestarm {

std::string_view mode_name(BoundMode mode) {
  switch (mode) {
    case BoundMode::kNonStructured:
      return "nonstructured";
    case BoundMode::kStructured:
      return "structured";
    case BoundMode::kEmpiricalLikelihood:
      return "el";
  }
  return "unknown";
}

BoundMode parse_mode(std::string_view name) {
  std::string key(name);
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  std::erase(key, '-');
  std::erase(key, '_');
  if (key == "nonstructured" || key == "ns" || key == "lucb") {
    return BoundMode::kNonStructured;
  }
  if (key == "structured" || key == "st" || key == "structuredlucb") {
    return BoundMode::kStructured;
  }
  if (key == "el" || key == "ellucb" || key == "empiricallikelihood") {
    return BoundMode::kEmpiricalLikelihood;
  }
  throw ValidationError("unknown mode '" + std::string(name) +
                        "' (expected nonstructured, structured or el)");
}

BoundProvider::BoundProvider(BoundMode mode, double el_radius_scale)
    : mode_(mode), el_radius_scale_(el_radius_scale) {}

MeanInterval BoundProvider::operator()(const ArmStatistics& stats,
                                       const SupportVector& v,
                                       const BonusContext& ctx) {
  switch (mode_) {
    case BoundMode::kNonStructured:
      return nonstructured_interval(stats, v, ctx);
    case BoundMode::kStructured:
      return structured_interval(stats, v, ctx);
    case BoundMode::kEmpiricalLikelihood: {
      scratch_.resize(stats.num_outcomes());
      stats.empirical_distribution(scratch_);
      const double radius = el_radius_scale_ * el_radius(ctx);
      return {el_lower(scratch_, v.values(), radius),
              el_upper(scratch_, v.values(), radius)};
    }
  }
  throw ContractViolation("unknown bound mode");
}

void RunConfig::validate(std::size_t num_arms) const {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw ContractViolation("delta must lie in (0, 1)");
  }
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ContractViolation("alpha must lie in [0, 1]");
  }
  if (!(epsilon_slack >= 0.0)) {
    throw ContractViolation("epsilon_slack must be nonnegative");
  }
  if (max_steps < num_arms) {
    throw ContractViolation("max_steps must be at least the number of arms");
  }
  if (!(el_radius_scale > 0.0)) {
    throw ContractViolation("el_radius_scale must be positive");
  }
}

std::vector<ArmStatistics> initialize(const ProblemInstance& instance,
                                      RandomStream& rng) {
  std::vector<ArmStatistics> stats;
  stats.reserve(instance.num_arms());
  for (std::size_t a = 0; a < instance.num_arms(); ++a) {
    stats.emplace_back(instance.num_outcomes());
    stats.back().update(sample_outcome(instance.arm(a), rng));
  }
  return stats;
}

LeaderChallenger select_leader_challenger(std::span<const MeanInterval> intervals) {
  if (intervals.size() < 2) {
    throw ContractViolation("leader/challenger selection needs two intervals");
  }
  LeaderChallenger out;
  for (std::size_t a = 1; a < intervals.size(); ++a) {
    if (intervals[a].lcb > intervals[out.leader].lcb) out.leader = a;
  }
  out.challenger = out.leader == 0 ? 1 : 0;
  for (std::size_t a = out.challenger + 1; a < intervals.size(); ++a) {
    if (a != out.leader && intervals[a].ucb > intervals[out.challenger].ucb) {
      out.challenger = a;
    }
  }
  return out;
}

std::size_t sample_choice(const LeaderChallenger& pair, double alpha, double u) {
  return u < alpha ? pair.leader : pair.challenger;
}

std::size_t sample_choice(const LeaderChallenger& pair, double alpha,
                          RandomStream& rng) {
  return sample_choice(pair, alpha, rng.uniform());
}

bool should_stop(const MeanInterval& leader, const MeanInterval& challenger,
                 double epsilon_slack) {
  return leader.lcb - challenger.ucb >= epsilon_slack;
}

RunResult run(const ProblemInstance& instance, const RunConfig& config) {
  config.validate(instance.num_arms());
  const std::size_t num_arms = instance.num_arms();
  const SupportVector& support = instance.support();

  RandomStream rng(config.seed);
  std::vector<ArmStatistics> stats = initialize(instance, rng);
  std::uint64_t t = num_arms;

  BoundProvider bounds(config.mode, config.el_radius_scale);
  std::vector<MeanInterval> intervals(num_arms);
  BonusContext ctx{.t = t,
                   .num_arms = num_arms,
                   .num_outcomes = instance.num_outcomes(),
                   .delta = config.delta,
                   .pulls = 1};

  RunResult result;
  while (true) {
    ctx.t = t;
    for (std::size_t a = 0; a < num_arms; ++a) {
      ctx.pulls = stats[a].pulls();
      intervals[a] = bounds(stats[a], support, ctx);
    }
    const LeaderChallenger pair = select_leader_challenger(intervals);
    const bool stop =
        should_stop(intervals[pair.leader], intervals[pair.challenger],
                    config.epsilon_slack);
    if (stop || t >= config.max_steps) {
      result.recommended = pair.leader;
      result.tau = t;
      result.truncated = !stop;
      result.final_intervals = intervals;
      break;
    }
    const std::size_t arm = sample_choice(pair, config.alpha, rng);
    if (config.record_trace) {
      result.trace.push_back({.step = t,
                              .arm = arm,
                              .leader = pair.leader,
                              .challenger = pair.challenger,
                              .lcb_leader = intervals[pair.leader].lcb,
                              .ucb_challenger = intervals[pair.challenger].ucb});
    }
    stats[arm].update(sample_outcome(instance.arm(arm), rng));
    ++t;
  }
  result.correct = result.recommended == instance.best_arm();
  return result;
}

void write_trace_csv(std::ostream& out, std::span<const TraceRecord> trace) {
  out << "step,arm,leader,challenger,lcb_leader,ucb_challenger\n";
  std::ostringstream line;
  line.precision(17);
  for (const TraceRecord& r : trace) {
    line.str({});
    line << r.step << ',' << r.arm << ',' << r.leader << ',' << r.challenger
         << ',' << r.lcb_leader << ',' << r.ucb_challenger << '\n';
    out << line.str();
  }
}

}  // namespace bestarm
