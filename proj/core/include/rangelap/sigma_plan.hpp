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

#ifndef RANGELAP_SIGMA_PLAN_HPP_
#define RANGELAP_SIGMA_PLAN_HPP_

#include <optional>

#include "rangelap/constraints.hpp"
#include "rangelap/sigma_single_infinite.hpp"
#include "rangelap/sigma_uniform.hpp"

namespace rangelap {

// Scale assignment for every admissible location parameter of one
// configuration: the distance-dependent schedule for the
// single-infinite class, a single uniform scale otherwise.
class SigmaPlan {
 public:
  // Selects the scale rule by configuration class: delta_f/epsilon with
  // no constraints, the distance-dependent schedule for one infinite
  // constraint, and the binary-search uniform scale for the rest.
  static SigmaPlan compute(const ConstraintConfig& config,
                           const PrivacyParams& params,
                           int precision_digits = kDefaultPrecisionDigits);

  // The uncorrected scale delta_f/epsilon at every location; does not
  // satisfy the guarantee once normalization is in play.
  static SigmaPlan naive(const ConstraintConfig& config,
                         const PrivacyParams& params);

  double sigma_at(double mu) const;

  // A copy with every scale multiplied by factor (> 0).
  SigmaPlan scaled(double factor) const;

  ConfigClass config_class() const { return class_; }
  const PrivacyParams& params() const { return params_; }
  bool distance_dependent() const { return single_.has_value(); }
  // The single scale of a uniform plan; requires !distance_dependent().
  double uniform_sigma() const;

 private:
  SigmaPlan(const PrivacyParams& params, ConfigClass cls,
            std::optional<SingleInfinitePlan> single, double uniform_sigma);

  PrivacyParams params_;
  ConfigClass class_;
  std::optional<SingleInfinitePlan> single_;
  double uniform_sigma_;
  double scale_factor_ = 1.0;
};

}  // namespace rangelap

#endif  // RANGELAP_SIGMA_PLAN_HPP_
