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

#ifndef BESTARM_RNG_H_
#define BESTARM_RNG_H_

#include <cstdint>
#include <random>

namespace bestarm {

// A seeded stream of uniform doubles. The mapping from engine output to
// [0, 1) is fixed here (top 53 bits) rather than left to
// std::uniform_real_distribution, so sequences are identical across standard
// libraries.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finaliser.
std::uint64_t mix64(std::uint64_t x);

// Seed for one trial, derived from (base seed, mode index, trial index) so
// that trials never share a stream and scheduling order is irrelevant.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t mode,
                          std::uint64_t trial);

}  // namespace bestarm

#endif  // BESTARM_RNG_H_
