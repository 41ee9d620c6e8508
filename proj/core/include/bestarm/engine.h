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

// The leader/challenger LUCB loop shared by all three interval geometries.

#ifndef BESTARM_ENGINE_H_
#define BESTARM_ENGINE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bestarm/bounds.h"
#include "bestarm/model.h"
#include "bestarm/rng.h"

namespace bestarm {

enum class BoundMode {
  kNonStructured = 0,
  kStructured = 1,
  kEmpiricalLikelihood = 2,
};

inline constexpr BoundMode kAllModes[] = {BoundMode::kNonStructured,
                                          BoundMode::kStructured,
                                          BoundMode::kEmpiricalLikelihood};

// "nonstructured", "structured", "el".
std::string_view mode_name(BoundMode mode);
// Accepts the names above plus a few aliases; throws ValidationError.
BoundMode parse_mode(std::string_view name);

// Computes the mean interval of one arm for a given mode. Holds a scratch
// buffer, so one provider per run.
class BoundProvider {
 public:
  explicit BoundProvider(BoundMode mode, double el_radius_scale = 1.0);

  BoundMode mode() const { return mode_; }

  MeanInterval operator()(const ArmStatistics& stats, const SupportVector& v,
                          const BonusContext& ctx);

 private:
  BoundMode mode_;
  double el_radius_scale_;
  std::vector<double> scratch_;
};

struct RunConfig {
  double delta = 0.05;
  double alpha = 0.5;           // probability of sampling the leader
  double epsilon_slack = 0.0;
  std::uint64_t max_steps = 10'000'000;
  std::uint64_t seed = 0;
  BoundMode mode = BoundMode::kStructured;
  // Multiplies the KL-ball radius in EL mode.
  double el_radius_scale = 1.0;
  bool record_trace = false;

  // Throws ContractViolation on delta outside (0,1), alpha outside [0,1],
  // negative slack, max_steps < num_arms or a non-positive radius scale.
  void validate(std::size_t num_arms) const;
};

struct TraceRecord {
  std::uint64_t step = 0;  // samples drawn before this one
  std::size_t arm = 0;
  std::size_t leader = 0;
  std::size_t challenger = 0;
  double lcb_leader = 0.0;
  double ucb_challenger = 0.0;
};

struct RunResult {
  std::size_t recommended = 0;
  std::uint64_t tau = 0;
  bool correct = false;
  bool truncated = false;
  // Intervals of every arm at the moment the run ended.
  std::vector<MeanInterval> final_intervals;
  std::vector<TraceRecord> trace;
};

// Pulls every arm once. Afterwards t = K.
std::vector<ArmStatistics> initialize(const ProblemInstance& instance,
                                      RandomStream& rng);

struct LeaderChallenger {
  std::size_t leader = 0;
  std::size_t challenger = 0;
};

// leader = argmax lcb, challenger = argmax ucb over the rest; lowest index
// wins ties. Throws ContractViolation on fewer than two intervals.
LeaderChallenger select_leader_challenger(std::span<const MeanInterval> intervals);

// Leader if u < alpha, otherwise challenger.
std::size_t sample_choice(const LeaderChallenger& pair, double alpha, double u);
std::size_t sample_choice(const LeaderChallenger& pair, double alpha,
                          RandomStream& rng);

// leader.lcb - challenger.ucb >= epsilon_slack.
bool should_stop(const MeanInterval& leader, const MeanInterval& challenger,
                 double epsilon_slack);

// One full run. Deterministic in (instance, config).
RunResult run(const ProblemInstance& instance, const RunConfig& config);

// Header: step,arm,leader,challenger,lcb_leader,ucb_challenger
void write_trace_csv(std::ostream& out, std::span<const TraceRecord> trace);

}  // namespace bestarm

#endif  // BESTARM_ENGINE_H_
