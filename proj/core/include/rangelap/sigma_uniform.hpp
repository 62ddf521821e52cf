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

#ifndef RANGELAP_SIGMA_UNIFORM_HPP_
#define RANGELAP_SIGMA_UNIFORM_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "rangelap/constraints.hpp"

namespace rangelap {

// Interior probe locations used per feasible span when checking a uniform
// scale. The worst-case location inside a span has no closed form, so
// spans are probed at both (clipped) endpoints plus this many grid points.
inline constexpr int kDefaultProbesPerSpan = 256;

// Decimal precision of the uniform-scale binary search.
inline constexpr int kDefaultPrecisionDigits = 6;

// Local growth condition at location mu: with L and R the constraint
// masses on each side of mu,
//
//   delta_f (2L - 1) / (sigma (L + R - 1)) <= epsilon.
//
// Necessary for the guarantee on pairs of locations within mu's span, and
// together with its reflected form and the endpoint-pair conditions,
// sufficient for every pair. Throws InfeasibleLocationError when mu lies
// inside a constraint.
bool span_condition(const ConstraintConfig& config,
                    const PrivacyParams& params, double sigma, double mu);

// Guarantee condition for the pair of locations sitting on the two
// endpoints of finite constraint k (the location on the right endpoint
// playing the reference role). Evaluated in log space so that small
// scales degrade to a clean failure instead of overflowing.
bool endpoint_pair_condition(const ConstraintConfig& config,
                             const PrivacyParams& params, double sigma,
                             std::size_t constraint_index);

// Which family of conditions rejected a candidate scale.
struct FailingCondition {
  enum class Kind {
    kSpan,           // span_condition on the configuration
    kReflectedSpan,  // span_condition on the reflected configuration
    kEndpointPair,
  };
  Kind kind;
  // Feasible-span index for the span kinds, constraint index otherwise.
  std::size_t index;
  // Probe location in original coordinates.
  double location;
};

struct FeasibilityReport {
  bool feasible;
  std::optional<FailingCondition> failing;
};

// Probe set for one configuration, reusable across many candidate scales.
// Unbounded spans are clipped 50 * (2 delta_f / epsilon) beyond the
// outermost constraint endpoint; past that every exponential term is
// negligible and the span condition reduces to sigma >= delta_f/epsilon.
class UniformFeasibility {
 public:
  UniformFeasibility(const ConstraintConfig& config,
                     const PrivacyParams& params,
                     int probes_per_span = kDefaultProbesPerSpan);

  FeasibilityReport check(double sigma) const;

  std::size_t probe_count() const { return probes_.size(); }

 private:
  struct Probe {
    std::size_t span_index;
    double location;
    LocationView view;
  };
  struct EndpointCase {
    std::size_t constraint_index;
    double width;
    LocationView at_right;
    LocationView at_left;
  };

  PrivacyParams params_;
  std::vector<EndpointCase> endpoint_cases_;
  std::vector<Probe> probes_;  // span endpoints first, interiors after
};

// One-shot feasibility test of a uniform scale: span conditions at every
// probe of every feasible span, the same on the reflected configuration,
// and one endpoint-pair condition per finite constraint.
FeasibilityReport feasible(const ConstraintConfig& config,
                           const PrivacyParams& params, double sigma);

// A uniform scale valid for every location parameter of the
// configuration.
struct UniformPlan {
  PrivacyParams params;
  double sigma;
  ConfigClass config_class;
  int precision_digits;
};

// Smallest feasible scale on the 10^-precision_digits grid within
// (0, 2 delta_f/epsilon], located by binary search; feasibility is upward
// closed in sigma, so the search is exact on the grid. Only defined for
// the all-finite and mixed constraint classes. Throws InternalError if
// the upper end of the bracket is itself infeasible, which valid
// configurations cannot produce.
UniformPlan optimal_uniform_sigma(const ConstraintConfig& config,
                                  const PrivacyParams& params,
                                  int precision_digits = kDefaultPrecisionDigits);

}  // namespace rangelap

#endif  // RANGELAP_SIGMA_UNIFORM_HPP_
