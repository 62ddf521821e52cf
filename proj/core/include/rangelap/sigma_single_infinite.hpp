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

#ifndef RANGELAP_SIGMA_SINGLE_INFINITE_HPP_
#define RANGELAP_SIGMA_SINGLE_INFINITE_HPP_

#include "rangelap/constraints.hpp"

namespace rangelap {

// Scale for a location parameter sitting exactly on the finite endpoint of
// an infinite constraint:
//
//   sigma_1 = -delta_f / (W(-1/(2e)) * e * epsilon)  ~=  1.586 delta_f/eps
double sigma_at_boundary(const PrivacyParams& params);

// Scale for a location parameter at the given distance from the endpoint.
// With i = distance/delta_f, evaluates
//
//   sigma_2 = -i dF e^{i eps} s1 /
//             (W_Z(-(2 i dF e^{-i eps}/s1) e^{-i dF e^{-i eps}/s1})
//              e^{i eps} s1 + i dF)
//
// on the principal branch for i <= 1/eps and the -1 branch beyond, which
// keeps the scale monotonically non-increasing in the distance. Decreases
// from sigma_at_boundary toward the delta_f/eps floor.
//
// Throws DomainError for negative distances.
double sigma_at_distance(const PrivacyParams& params, double distance);

// Whether sigma2 is an admissible scale for a location parameter at
// distance i*delta_f from the constraint, given the scale sigma1 in force
// on the endpoint: sigma2 must fall below the principal-branch bound,
// above the -1-branch bound, and inside one of the two disjoint spans
// that keep the W argument real-valued. The scales produced by
// sigma_at_boundary / sigma_at_distance saturate these bounds.
//
// Propagates DomainError when a bound's W argument falls below -1/e
// beyond the clamp window, which signals an invalid (sigma1, i) pairing.
bool sigma_bounds_hold(const PrivacyParams& params, double i, double sigma1,
                       double sigma2);

// Side on which the constraint extends to infinity.
enum class InfiniteSide { kLeft, kRight };

// The distance-dependent scale plan for a single-infinite-constraint
// configuration. A constraint spanning to -inf is the horizontal
// reflection of one spanning to +inf, so one distance formula serves both.
class SingleInfinitePlan {
 public:
  static SingleInfinitePlan from_config(const ConstraintConfig& config,
                                        const PrivacyParams& params);

  // Scale for a mechanism located at mu. Throws InfeasibleLocationError
  // when mu lies inside the constraint.
  double sigma_for(double mu) const;

  const PrivacyParams& params() const { return params_; }
  double boundary() const { return boundary_; }
  InfiniteSide side() const { return side_; }
  // The scale at distance zero.
  double sigma0() const { return sigma0_; }

 private:
  SingleInfinitePlan(const PrivacyParams& params, double boundary,
                     InfiniteSide side);

  PrivacyParams params_;
  double boundary_;
  InfiniteSide side_;
  double sigma0_;
};

}  // namespace rangelap

#endif  // RANGELAP_SIGMA_SINGLE_INFINITE_HPP_
