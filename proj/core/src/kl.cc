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

#include "bestarm/kl.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "bestarm/errors.h"

namespace bestarm {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxIterations = 200;
constexpr double kDualTolerance = 1e-12;

// The support seen through a sign flip: sign = -1 turns every upper-side
// problem into its lower-side mirror image.
struct SignedSupport {
  std::span<const double> values;
  double sign;

  double operator[](std::size_t i) const { return sign * values[i]; }
};

struct Summary {
  double mean = 0.0;
  double top = 0.0;       // largest (signed) support value, over all outcomes
  double top_mass = 0.0;  // probability sitting on that value
};

Summary summarize(std::span<const double> p, SignedSupport v) {
  Summary s;
  s.top = v[0];
  for (std::size_t i = 1; i < p.size(); ++i) s.top = std::max(s.top, v[i]);
  for (std::size_t i = 0; i < p.size(); ++i) {
    s.mean += p[i] * v[i];
    if (v[i] == s.top) s.top_mass += p[i];
  }
  return s;
}

// max over lambda in [0, 1/(top - x)] of sum_i p_i ln(1 - lambda (v_i - x)).
double klinf_dual(std::span<const double> p, SignedSupport v, double x) {
  const Summary s = summarize(p, v);
  if (x <= s.mean) return 0.0;
  if (x >= s.top) return s.mean >= s.top ? 0.0 : kInf;

  const double lambda_max = 1.0 / (s.top - x);
  auto slope = [&](double lambda) {
    double out = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] <= 0.0) continue;
      const double a = v[i] - x;
      out -= p[i] * a / (1.0 - lambda * a);
    }
    return out;
  };
  auto objective = [&](double lambda) {
    double out = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] <= 0.0) continue;
      out += p[i] * std::log1p(-lambda * (v[i] - x));
    }
    return out;
  };

  // With no mass on the top value the objective stays finite at the closed
  // end of the interval and the maximum may sit there.
  if (s.top_mass == 0.0 && slope(lambda_max) >= 0.0) {
    return std::max(0.0, objective(lambda_max));
  }
  double lo = 0.0;
  double hi = lambda_max;
  for (int it = 0; it < kMaxIterations && hi - lo > kDualTolerance * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (slope(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::max(0.0, objective(0.5 * (lo + hi)));
}

// Exponential tilt q_i ~ p_i / (1 - lambda (v_i - m)) of the center and the
// quantities the root finder needs. f is KL(p || q), increasing in lambda.
struct Tilt {
  double f = 0.0;
  double df = 0.0;
  double value = 0.0;  // q . v
};

Tilt tilt(std::span<const double> p, SignedSupport v, double mean, double lambda) {
  // Sum_i p_i a_i = 0, so S - 1 = lambda^2 Sum_i p_i a_i^2 / den_i exactly;
  // writing it that way keeps f accurate for tiny radii.
  double log_sum = 0.0;
  double q1 = 0.0;  // Sum p a^2 / den
  double q2 = 0.0;  // Sum p a / den^2
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    const double a = v[i] - mean;
    const double den = 1.0 - lambda * a;
    log_sum += p[i] * std::log1p(-lambda * a);
    q1 += p[i] * a * a / den;
    q2 += p[i] * a / (den * den);
  }
  const double b = lambda * q1;           // Sum p a / den
  const double s_minus_one = lambda * b;  // S - 1
  const double s = 1.0 + s_minus_one;
  Tilt out;
  out.f = log_sum + std::log1p(s_minus_one);
  out.df = -b + q2 / s;
  out.value = mean + b / s;
  return out;
}

// max { q . v : KL(p || q) <= radius } in signed coordinates.
double el_dual(std::span<const double> p, SignedSupport v, double radius) {
  const Summary s = summarize(p, v);
  const double gap = s.top - s.mean;
  if (!(radius > 0.0) || !(gap > 0.0)) return s.mean;

  const double lambda_max = 1.0 / gap;
  if (s.top_mass == 0.0) {
    // Unobserved top outcome: once the tilt saturates, the remaining budget
    // moves mass r onto the top value, costing -ln(1 - r).
    const Tilt edge = tilt(p, v, s.mean, lambda_max);
    if (edge.f <= radius) {
      const double keep = std::exp(edge.f - radius);
      return (1.0 - keep) * s.top + keep * edge.value;
    }
  }

  double variance = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double a = v[i] - s.mean;
    variance += p[i] * a * a;
  }
  double lo = 0.0;
  double hi = lambda_max;
  // f ~ lambda^2 variance / 2 near the origin.
  double lambda = std::min(std::sqrt(2.0 * radius / variance), 0.5 * hi);
  Tilt at{};
  for (int it = 0; it < kMaxIterations; ++it) {
    at = tilt(p, v, s.mean, lambda);
    const double g = at.f - radius;
    if (g > 0.0) {
      hi = lambda;
    } else {
      lo = lambda;
    }
    if (std::abs(g) <= 1e-13 * radius || hi - lo <= 1e-15 * hi) break;
    double next = lambda - g / at.df;
    if (!(at.df > 0.0) || !(next > lo && next < hi)) next = 0.5 * (lo + hi);
    lambda = next;
  }
  return std::clamp(at.value, s.mean, s.top);
}

void check_dimensions(std::size_t p, std::size_t v) {
  if (p != v) {
    throw ContractViolation("dimension mismatch between distribution and support");
  }
}

void check_threshold(const SupportVector& v, double x) {
  if (!(x >= v.min() && x <= v.max())) {
    std::ostringstream msg;
    msg << "threshold " << x << " is outside the support range [" << v.min()
        << ", " << v.max() << "]";
    throw ContractViolation(msg.str());
  }
}

}  // namespace

double kl_divergence(const SimplexVector& p, const SimplexVector& q) {
  check_dimensions(p.size(), q.size());
  double out = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    if (q[i] <= 0.0) return kInf;
    out += p[i] * std::log(p[i] / q[i]);
  }
  return std::max(0.0, out);
}

double kl_bernoulli(double x, double y) {
  if (!(x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0)) {
    throw ContractViolation("Bernoulli parameters must lie in [0, 1]");
  }
  if (x == y) return 0.0;
  double out = 0.0;
  if (x > 0.0) {
    if (y == 0.0) return kInf;
    out += x * std::log(x / y);
  }
  if (x < 1.0) {
    if (y == 1.0) return kInf;
    out += (1.0 - x) * std::log((1.0 - x) / (1.0 - y));
  }
  return std::max(0.0, out);
}

double klinf_upper(std::span<const double> p_hat, std::span<const double> v,
                   double x) {
  return klinf_dual(p_hat, {v, 1.0}, x);
}

double klinf_upper(const SimplexVector& p_hat, const SupportVector& v, double x) {
  check_dimensions(p_hat.size(), v.size());
  check_threshold(v, x);
  return klinf_dual(p_hat.probabilities(), {v.values(), 1.0}, x);
}

double klinf_lower(const SimplexVector& p_hat, const SupportVector& v, double x) {
  check_dimensions(p_hat.size(), v.size());
  check_threshold(v, x);
  return klinf_dual(p_hat.probabilities(), {v.values(), -1.0}, -x);
}

KlBall::KlBall(SimplexVector center_in, double radius_in)
    : center(std::move(center_in)), radius(radius_in) {
  if (!(radius >= 0.0) || !std::isfinite(radius)) {
    throw ContractViolation("KL-ball radius must be finite and nonnegative");
  }
}

double el_upper(std::span<const double> center, std::span<const double> v,
                double radius) {
  return el_dual(center, {v, 1.0}, radius);
}

double el_lower(std::span<const double> center, std::span<const double> v,
                double radius) {
  return -el_dual(center, {v, -1.0}, radius);
}

double el_upper(const KlBall& ball, const SupportVector& v) {
  check_dimensions(ball.center.size(), v.size());
  return el_upper(ball.center.probabilities(), v.values(), ball.radius);
}

double el_lower(const KlBall& ball, const SupportVector& v) {
  check_dimensions(ball.center.size(), v.size());
  return el_lower(ball.center.probabilities(), v.values(), ball.radius);
}

double el_radius(const BonusContext& ctx) {
  ctx.validate();
  return std::log(2.0 * static_cast<double>(ctx.num_arms) *
                  static_cast<double>(ctx.t) / ctx.delta) /
         static_cast<double>(ctx.pulls);
}

}  // namespace bestarm
