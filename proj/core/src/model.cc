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

#include "bestarm/model.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "bestarm/errors.h"
#include "bestarm/rng.h"

namespace bestarm {

SupportVector::SupportVector(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.size() < 2) {
    throw ContractViolation("support needs at least two outcomes");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double v = values_[i];
    if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
      std::ostringstream msg;
      msg << "support value v[" << i << "] = " << v << " is outside [0, 1]";
      throw ContractViolation(msg.str());
    }
  }
  const auto [lo, hi] = std::minmax_element(values_.begin(), values_.end());
  min_ = *lo;
  max_ = *hi;
  l1_norm_ = std::accumulate(values_.begin(), values_.end(), 0.0);
}

SimplexVector::SimplexVector(std::vector<double> probabilities)
    : probabilities_(std::move(probabilities)) {
  if (probabilities_.empty()) {
    throw ContractViolation("probability vector is empty");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < probabilities_.size(); ++i) {
    const double p = probabilities_[i];
    if (!std::isfinite(p) || p < 0.0) {
      std::ostringstream msg;
      msg << "probability p[" << i << "] = " << p << " is negative or not finite";
      throw ContractViolation(msg.str());
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kSimplexTolerance) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "probabilities sum to " << sum << ", expected 1";
    throw ContractViolation(msg.str());
  }
  if (sum != 1.0) {
    for (double& p : probabilities_) p /= sum;
  }
}

double expected_value(std::span<const double> p, std::span<const double> v) {
  if (p.size() != v.size()) {
    throw ContractViolation("dimension mismatch between probabilities and support");
  }
  return std::inner_product(p.begin(), p.end(), v.begin(), 0.0);
}

double expected_value(const SimplexVector& p, const SupportVector& v) {
  return expected_value(p.probabilities(), v.values());
}

std::size_t sample_outcome(const SimplexVector& p, double u) {
  const auto probs = p.probabilities();
  double cumulative = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] <= 0.0) continue;
    cumulative += probs[i];
    last_positive = i;
    if (u < cumulative) return i;
  }
  return last_positive;
}

std::size_t sample_outcome(const SimplexVector& p, RandomStream& rng) {
  return sample_outcome(p, rng.uniform());
}

ProblemInstance::ProblemInstance(std::string name, std::vector<SimplexVector> arms,
                                 SupportVector support)
    : name_(std::move(name)), arms_(std::move(arms)), support_(std::move(support)) {
  if (arms_.size() < 2) {
    throw ContractViolation("an instance needs at least two arms");
  }
  means_.reserve(arms_.size());
  for (std::size_t a = 0; a < arms_.size(); ++a) {
    if (arms_[a].size() != support_.size()) {
      std::ostringstream msg;
      msg << "arm " << a << " has " << arms_[a].size()
          << " outcomes but the support has " << support_.size();
      throw ContractViolation(msg.str());
    }
    means_.push_back(expected_value(arms_[a], support_));
  }
  best_arm_ = static_cast<std::size_t>(
      std::max_element(means_.begin(), means_.end()) - means_.begin());
  for (std::size_t a = 0; a < means_.size(); ++a) {
    if (a != best_arm_ && means_[a] == means_[best_arm_]) {
      std::ostringstream msg;
      msg << "arms " << best_arm_ << " and " << a << " share the best mean "
          << means_[a];
      throw DegenerateInstance(msg.str());
    }
  }
}

void ArmStatistics::update(std::size_t outcome) {
  if (outcome >= counts_.size()) {
    std::ostringstream msg;
    msg << "outcome index " << outcome << " out of range for d = " << counts_.size();
    throw ContractViolation(msg.str());
  }
  ++counts_[outcome];
  ++pulls_;
}

void ArmStatistics::empirical_distribution(std::span<double> out) const {
  if (pulls_ == 0) throw NoSamplesError();
  const double n = static_cast<double>(pulls_);
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    out[i] = static_cast<double>(counts_[i]) / n;
  }
}

SimplexVector ArmStatistics::empirical_distribution() const {
  std::vector<double> p(counts_.size());
  empirical_distribution(p);
  return SimplexVector(std::move(p));
}

}  // namespace bestarm
