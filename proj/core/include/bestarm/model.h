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

// Ground-truth problem instances over a known finite support, and the
// per-arm statistics a learner accumulates while sampling them.
//
// Outcomes are 0-based indices into the support. The one-hot observation of
// the model is never materialised.

#ifndef BESTARM_MODEL_H_
#define BESTARM_MODEL_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bestarm {

class RandomStream;

// Absolute tolerance on the sum of a probability vector.
inline constexpr double kSimplexTolerance = 1e-9;

// The known outcome values v_1..v_d, each in [0, 1].
class SupportVector {
 public:
  explicit SupportVector(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const { return values_; }

  double max() const { return max_; }
  double min() const { return min_; }
  double range() const { return max_ - min_; }
  // Sum of |v_i|; equals the plain sum since every v_i >= 0.
  double l1_norm() const { return l1_norm_; }

  friend bool operator==(const SupportVector&, const SupportVector&) = default;

 private:
  std::vector<double> values_;
  double max_ = 0.0;
  double min_ = 0.0;
  double l1_norm_ = 0.0;
};

// A probability vector on d outcomes. The constructor accepts inputs whose
// sum is within kSimplexTolerance of 1 and renormalises them once.
class SimplexVector {
 public:
  explicit SimplexVector(std::vector<double> probabilities);

  std::size_t size() const { return probabilities_.size(); }
  double operator[](std::size_t i) const { return probabilities_[i]; }
  std::span<const double> probabilities() const { return probabilities_; }

  friend bool operator==(const SimplexVector&, const SimplexVector&) = default;

 private:
  std::vector<double> probabilities_;
};

// Mean of the support under p. Throws ContractViolation on size mismatch.
double expected_value(const SimplexVector& p, const SupportVector& v);
double expected_value(std::span<const double> p, std::span<const double> v);

// Inverse-CDF lookup: the smallest i with u < p_1 + ... + p_i, for u in
// [0, 1). Rounding slack at the top end maps to the last outcome with
// positive mass.
std::size_t sample_outcome(const SimplexVector& p, double u);
// Consumes exactly one uniform draw from rng.
std::size_t sample_outcome(const SimplexVector& p, RandomStream& rng);

// K arms sharing one support. The mean of every arm and the identity of the
// best arm are computed once at construction.
class ProblemInstance {
 public:
  // Throws ContractViolation if K < 2 or an arm's dimension differs from the
  // support, DegenerateInstance if the best mean is not unique.
  ProblemInstance(std::string name, std::vector<SimplexVector> arms,
                  SupportVector support);

  const std::string& name() const { return name_; }
  std::size_t num_arms() const { return arms_.size(); }
  std::size_t num_outcomes() const { return support_.size(); }
  const SimplexVector& arm(std::size_t a) const { return arms_[a]; }
  const std::vector<SimplexVector>& arms() const { return arms_; }
  const SupportVector& support() const { return support_; }
  const std::vector<double>& means() const { return means_; }
  std::size_t best_arm() const { return best_arm_; }

  friend bool operator==(const ProblemInstance& a, const ProblemInstance& b) {
    return a.arms_ == b.arms_ && a.support_ == b.support_;
  }

 private:
  std::string name_;
  std::vector<SimplexVector> arms_;
  SupportVector support_;
  std::vector<double> means_;
  std::size_t best_arm_ = 0;
};

// Outcome counts for one arm over a single run.
class ArmStatistics {
 public:
  explicit ArmStatistics(std::size_t num_outcomes) : counts_(num_outcomes, 0) {}

  // Records one observation. Throws ContractViolation if outcome >= d.
  void update(std::size_t outcome);

  std::size_t num_outcomes() const { return counts_.size(); }
  std::uint64_t pulls() const { return pulls_; }
  std::span<const std::uint64_t> counts() const { return counts_; }

  // counts / pulls. Throws NoSamplesError when pulls == 0.
  SimplexVector empirical_distribution() const;
  // Same values written into out (size d) without allocating.
  void empirical_distribution(std::span<double> out) const;

 private:
  std::vector<std::uint64_t> counts_;
  std::uint64_t pulls_ = 0;
};

}  // namespace bestarm

#endif  // BESTARM_MODEL_H_
