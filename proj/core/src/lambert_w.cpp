// Copyright 2026 The rangelap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rangelap/lambert_w.hpp"

#include <algorithm>
#include <cmath>

#include "rangelap/errors.hpp"

namespace rangelap {
namespace {

constexpr double kStepTol = 1e-15;
constexpr int kMaxIterations = 100;

// Halley iteration on f(w) = w*e^w - x.
double halley(double x, double w) {
  double prev = w;
  for (int it = 0; it < kMaxIterations; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * (w + 1.0));
    const double step = f / denom;
    const double next = w - step;
    if (!std::isfinite(next)) {
      throw InternalError("lambert_w: iteration diverged");
    }
    // The second test breaks ulp-level two-cycles.
    if (std::abs(step) <= kStepTol || next == w || next == prev) {
      return next;
    }
    prev = w;
    w = next;
  }
  throw InternalError("lambert_w: no convergence after 100 iterations");
}

// Halley iteration in log space on h(w) = w + ln(w) - ln(x), for large
// positive arguments where forming w*e^w is ill-conditioned.
double halley_log_principal(double log_x, double w) {
  for (int it = 0; it < kMaxIterations; ++it) {
    const double h = w + std::log(w) - log_x;
    const double h1 = 1.0 + 1.0 / w;
    const double h2 = -1.0 / (w * w);
    const double step = h / (h1 - h * h2 / (2.0 * h1));
    const double next = w - step;
    if (!std::isfinite(next) || next <= 0.0) {
      throw InternalError("lambert_w: iteration diverged");
    }
    if (std::abs(step) <= kStepTol * (1.0 + std::abs(w)) || next == w) {
      return next;
    }
    w = next;
  }
  throw InternalError("lambert_w: no convergence after 100 iterations");
}

// Halley iteration on h(w) = w + ln(-w) - log_neg_x for the -1 branch,
// where log_neg_x = ln(-x). Valid for w < -1.
double halley_log_minus_one(double log_neg_x, double w) {
  for (int it = 0; it < kMaxIterations; ++it) {
    const double h = w + std::log(-w) - log_neg_x;
    const double h1 = 1.0 + 1.0 / w;
    const double h2 = -1.0 / (w * w);
    const double step = h / (h1 - h * h2 / (2.0 * h1));
    const double next = w - step;
    if (!std::isfinite(next) || next >= -1.0) {
      throw InternalError("lambert_w: iteration diverged");
    }
    if (std::abs(step) <= kStepTol * (1.0 + std::abs(w)) || next == w) {
      return next;
    }
    w = next;
  }
  throw InternalError("lambert_w: no convergence after 100 iterations");
}

// Series expansion about the branch point in p = +-sqrt(2*(e*x + 1)).
double branch_point_series(double p) {
  return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)));
}

double principal(double x) {
  if (x == 0.0) return 0.0;
  if (x > 3.0) {
    // Asymptotic seed w ~ L1 - L2 + L2/L1, refined in log space.
    const double log_x = std::log(x);
    const double l2 = std::log(log_x);
    return halley_log_principal(log_x, log_x - l2 + l2 / log_x);
  }
  if (x < -0.3) {
    const double p = std::sqrt(std::max(0.0, 2.0 * (std::exp(1.0) * x + 1.0)));
    const double seed = branch_point_series(p);
    if (p < 1e-5) return seed;
    return halley(x, seed);
  }
  // Series seed W(x) ~ x - x^2 + 1.5*x^3 near zero; adequate as a Halley
  // starting point throughout [-0.3, 3].
  const double seed =
      (x < 0.5) ? x * (1.0 - x * (1.0 - 1.5 * x)) : std::log1p(x);
  return halley(x, seed);
}

double minus_one(double x) {
  if (x < -0.27) {
    const double p =
        -std::sqrt(std::max(0.0, 2.0 * (std::exp(1.0) * x + 1.0)));
    const double seed = branch_point_series(p);
    if (p > -1e-5) return seed;
    return halley(x, seed);
  }
  const double log_neg_x = std::log(-x);
  if (log_neg_x < -500.0) {
    return lambert_w_minus_one_log(log_neg_x);
  }
  // Asymptotic seed w ~ u - ln(-u) + ln(-u)/u with u = ln(-x).
  const double lnu = std::log(-log_neg_x);
  return halley(x, log_neg_x - lnu + lnu / log_neg_x);
}

}  // namespace

double lambert_w(WBranch branch, double x) {
  if (std::isnan(x)) {
    throw DomainError("lambert_w: argument is NaN");
  }
  if (x < kWBranchPoint) {
    if (x < kWBranchPoint - kWClampWindow) {
      throw DomainError("lambert_w: argument below -1/e");
    }
    return -1.0;
  }
  if (branch == WBranch::kPrincipal) {
    return principal(x);
  }
  if (x >= 0.0) {
    throw DomainError("lambert_w: -1 branch requires a negative argument");
  }
  return minus_one(x);
}

double lambert_w_minus_one_log(double log_neg_x) {
  if (std::isnan(log_neg_x) || log_neg_x > -1.0) {
    throw DomainError("lambert_w_minus_one_log: argument above -1");
  }
  if (log_neg_x > -500.0) {
    return lambert_w(WBranch::kMinusOne, -std::exp(log_neg_x));
  }
  const double lnu = std::log(-log_neg_x);
  return halley_log_minus_one(log_neg_x, log_neg_x - lnu + lnu / log_neg_x);
}

}  // namespace rangelap
