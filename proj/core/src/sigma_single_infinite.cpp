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

#include "rangelap/sigma_single_infinite.hpp"

#include <cmath>

#include "rangelap/errors.hpp"
#include "rangelap/lambert_w.hpp"

namespace rangelap {
namespace {

const double kE = std::exp(1.0);

// Relative slack absorbing float rounding when a value sits exactly on a
// bound by construction.
constexpr double kBoundSlack = 1e-9;

// Scale from a W-branch value, in the overflow-free form obtained by
// dividing the numerator and denominator by e^{i eps}:
//
//   sigma_2 = -i dF s1 / (w s1 + i dF e^{-i eps})
double sigma_from_w(double w, double i, double eps, double delta_f,
                    double sigma1) {
  return -i * delta_f * sigma1 /
         (w * sigma1 + i * delta_f * std::exp(-i * eps));
}

// The W argument -(2 i dF e^{-i eps}/s1) e^{-i dF e^{-i eps}/s1}.
double w_argument(double i, double eps, double delta_f, double sigma1) {
  const double scaled = i * delta_f * std::exp(-i * eps) / sigma1;
  return -2.0 * scaled * std::exp(-scaled);
}

}  // namespace

double sigma_at_boundary(const PrivacyParams& params) {
  const double w = lambert_w(WBranch::kPrincipal, -1.0 / (2.0 * kE));
  return -params.delta_f() / (w * kE * params.epsilon());
}

double sigma_at_distance(const PrivacyParams& params, double distance) {
  if (!(distance >= 0.0)) {
    throw DomainError("sigma_at_distance: distance must be non-negative");
  }
  const double sigma1 = sigma_at_boundary(params);
  if (distance == 0.0) return sigma1;

  const double eps = params.epsilon();
  const double delta_f = params.delta_f();
  const double i = distance / delta_f;

  if (i <= 1.0 / eps) {
    const double arg = w_argument(i, eps, delta_f, sigma1);
    if (arg == 0.0) return sigma1;  // distance below representable effect
    const double w = lambert_w(WBranch::kPrincipal, arg);
    return sigma_from_w(w, i, eps, delta_f, sigma1);
  }
  // -1 branch past i = 1/eps. For large i eps the argument underflows, so
  // evaluate W_{-1} from the argument's logarithm instead:
  //   ln(-arg) = ln(2 i dF / s1) - i eps - (i dF / s1) e^{-i eps}
  const double log_neg_arg = std::log(2.0 * i * delta_f / sigma1) -
                             i * eps -
                             (i * delta_f / sigma1) * std::exp(-i * eps);
  double w;
  if (log_neg_arg < -500.0) {
    w = lambert_w_minus_one_log(log_neg_arg);
  } else {
    w = lambert_w(WBranch::kMinusOne, w_argument(i, eps, delta_f, sigma1));
  }
  return sigma_from_w(w, i, eps, delta_f, sigma1);
}

bool sigma_bounds_hold(const PrivacyParams& params, double i, double sigma1,
                       double sigma2) {
  if (!(i > 0.0) || !(sigma1 > 0.0) || !(sigma2 > 0.0)) {
    throw DomainError("sigma_bounds_hold: i, sigma1, sigma2 must be positive");
  }
  const double eps = params.epsilon();
  const double delta_f = params.delta_f();

  const double arg = w_argument(i, eps, delta_f, sigma1);
  const double upper =
      sigma_from_w(lambert_w(WBranch::kPrincipal, arg), i, eps, delta_f,
                   sigma1);
  const double lower =
      sigma_from_w(lambert_w(WBranch::kMinusOne, arg), i, eps, delta_f,
                   sigma1);

  // Disjoint spans keeping the W argument real-valued: u = W(-1/(2e)) i eps
  // e^{1 - i eps}, t = 2 u e^u; sigma2 >= i dF / (u - W(t)) or
  // sigma2 <= i dF / (u - W_{-1}(t)).
  const double wq = lambert_w(WBranch::kPrincipal, -1.0 / (2.0 * kE));
  const double u = wq * i * eps * std::exp(1.0 - i * eps);
  const double t = 2.0 * u * std::exp(u);
  const double span_lower = i * delta_f / (u - lambert_w(WBranch::kPrincipal, t));
  const double span_upper = i * delta_f / (u - lambert_w(WBranch::kMinusOne, t));

  const bool within_branch_bounds = sigma2 <= upper * (1.0 + kBoundSlack) &&
                                    sigma2 >= lower * (1.0 - kBoundSlack);
  const bool within_real_spans = sigma2 >= span_lower * (1.0 - kBoundSlack) ||
                                 sigma2 <= span_upper * (1.0 + kBoundSlack);
  return within_branch_bounds && within_real_spans;
}

SingleInfinitePlan::SingleInfinitePlan(const PrivacyParams& params,
                                       double boundary, InfiniteSide side)
    : params_(params),
      boundary_(boundary),
      side_(side),
      sigma0_(sigma_at_boundary(params)) {}

SingleInfinitePlan SingleInfinitePlan::from_config(
    const ConstraintConfig& config, const PrivacyParams& params) {
  if (config.classify() != ConfigClass::kSingleInfinite) {
    throw ConfigError(
        "SingleInfinitePlan requires a single-infinite configuration");
  }
  const Interval& c = config.intervals().front();
  if (c.left_infinite()) {
    return SingleInfinitePlan(params, c.right, InfiniteSide::kLeft);
  }
  return SingleInfinitePlan(params, c.left, InfiniteSide::kRight);
}

double SingleInfinitePlan::sigma_for(double mu) const {
  const double distance =
      side_ == InfiniteSide::kLeft ? mu - boundary_ : boundary_ - mu;
  if (distance < 0.0) {
    throw InfeasibleLocationError(
        "location parameter lies inside the constraint");
  }
  return sigma_at_distance(params_, distance);
}

}  // namespace rangelap
