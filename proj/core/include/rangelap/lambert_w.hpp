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

#ifndef RANGELAP_LAMBERT_W_HPP_
#define RANGELAP_LAMBERT_W_HPP_

namespace rangelap {

// Real branches of the Lambert W function, the inverse of w -> w*e^w.
// kPrincipal yields W(x) >= -1 on [-1/e, inf); kMinusOne yields
// W_{-1}(x) <= -1 on [-1/e, 0).
enum class WBranch { kPrincipal, kMinusOne };

// The branch point -1/e, the smallest argument with a real-valued W.
inline constexpr double kWBranchPoint = -0.36787944117144233;

// Arguments within this window below -1/e are clamped onto the branch
// point; callers produce inputs that sit exactly at -1/e analytically but
// drift below it in floating point.
inline constexpr double kWClampWindow = 1e-12;

// Evaluates the requested branch by Halley iteration from branch-specific
// seeds. Satisfies |W(x)*e^W(x) - x| <= 1e-12 * max(1, |x|).
//
// Throws DomainError when x < -1/e beyond the clamp window, or when
// branch is kMinusOne and x >= 0. Throws InternalError if the iteration
// fails to converge within 100 steps.
double lambert_w(WBranch branch, double x);

// W_{-1}(-exp(log_neg_x)) evaluated without forming the argument, for use
// when -exp(log_neg_x) would underflow. Requires log_neg_x <= -1
// (arguments at or above the branch point in magnitude).
double lambert_w_minus_one_log(double log_neg_x);

}  // namespace rangelap

#endif  // RANGELAP_LAMBERT_W_HPP_
