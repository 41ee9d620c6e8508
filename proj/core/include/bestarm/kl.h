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

// KL geometry on the simplex over a known finite support.
//
// KL_inf and the empirical-likelihood bounds are computed through their
// one-dimensional duals. The span overloads accept any real support values
// (the lower-side functions are obtained by negating the support) and skip
// all validation; they exist for the sampling loop.

#ifndef BESTARM_KL_H_
#define BESTARM_KL_H_

#include <span>

#include "bestarm/bounds.h"
#include "bestarm/model.h"

namespace bestarm {

// KL(p || q) with 0 ln 0 = 0. +infinity iff some p_i > 0 has q_i = 0.
double kl_divergence(const SimplexVector& p, const SimplexVector& q);

// Bernoulli KL. Returns +infinity when y is 0 or 1 and x differs from it.
// Throws ContractViolation for arguments outside [0,1].
double kl_bernoulli(double x, double y);

// min { KL(p_hat || q) : q.v >= x }. Zero for x <= p_hat.v. Throws
// ContractViolation for x outside [min v, max v].
double klinf_upper(const SimplexVector& p_hat, const SupportVector& v, double x);
// min { KL(p_hat || q) : q.v <= x }. Zero for x >= p_hat.v.
double klinf_lower(const SimplexVector& p_hat, const SupportVector& v, double x);

double klinf_upper(std::span<const double> p_hat, std::span<const double> v,
                   double x);

// The set { q : KL(center || q) <= radius }.
struct KlBall {
  KlBall(SimplexVector center, double radius);

  SimplexVector center;
  double radius;
};

// max { q.v : q in ball }. Mass may move onto outcomes the center never saw.
double el_upper(const KlBall& ball, const SupportVector& v);
// min { q.v : q in ball }.
double el_lower(const KlBall& ball, const SupportVector& v);

double el_upper(std::span<const double> center, std::span<const double> v,
                double radius);
double el_lower(std::span<const double> center, std::span<const double> v,
                double radius);

// KL-ball radius ln(2Kt/delta) / n.
double el_radius(const BonusContext& ctx);

}  // namespace bestarm

#endif  // BESTARM_KL_H_
