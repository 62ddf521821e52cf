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

#include "rangelap/sigma_plan.hpp"

#include <utility>

#include "rangelap/errors.hpp"

namespace rangelap {

SigmaPlan::SigmaPlan(const PrivacyParams& params, ConfigClass cls,
                     std::optional<SingleInfinitePlan> single,
                     double uniform_sigma)
    : params_(params),
      class_(cls),
      single_(std::move(single)),
      uniform_sigma_(uniform_sigma) {}

SigmaPlan SigmaPlan::compute(const ConstraintConfig& config,
                             const PrivacyParams& params,
                             int precision_digits) {
  const ConfigClass cls = config.classify();
  switch (cls) {
    case ConfigClass::kEmpty:
      return SigmaPlan(params, cls, std::nullopt, params.base_scale());
    case ConfigClass::kSingleInfinite:
      return SigmaPlan(params, cls,
                       SingleInfinitePlan::from_config(config, params), 0.0);
    default:
      return SigmaPlan(
          params, cls, std::nullopt,
          optimal_uniform_sigma(config, params, precision_digits).sigma);
  }
}

SigmaPlan SigmaPlan::naive(const ConstraintConfig& config,
                           const PrivacyParams& params) {
  return SigmaPlan(params, config.classify(), std::nullopt,
                   params.base_scale());
}

double SigmaPlan::sigma_at(double mu) const {
  const double base = single_ ? single_->sigma_for(mu) : uniform_sigma_;
  return base * scale_factor_;
}

SigmaPlan SigmaPlan::scaled(double factor) const {
  if (!(factor > 0.0)) {
    throw DomainError("SigmaPlan::scaled requires a positive factor");
  }
  SigmaPlan copy = *this;
  copy.scale_factor_ *= factor;
  return copy;
}

double SigmaPlan::uniform_sigma() const {
  if (single_) {
    throw InternalError("uniform_sigma called on a distance-dependent plan");
  }
  return uniform_sigma_ * scale_factor_;
}

}  // namespace rangelap
