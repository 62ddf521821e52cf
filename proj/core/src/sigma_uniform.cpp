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

#include "rangelap/sigma_uniform.hpp"

#include <cmath>
#include <utility>

#include "rangelap/errors.hpp"
#include "rangelap/laplace.hpp"

namespace rangelap {
namespace {

// The span condition from precomputed masses. A non-positive surviving
// mass cannot certify anything and counts as a failure.
bool span_condition_from_masses(const PrivacyParams& params, double sigma,
                                double l, double r) {
  const double surviving = 1.0 - (l + r);
  if (surviving <= 0.0) return false;
  return params.delta_f() * (1.0 - 2.0 * l) / (sigma * surviving) <=
         params.epsilon();
}

// Endpoint-pair condition in log space: with masses m1 at the right
// endpoint and m2 at the left endpoint of a width-w constraint,
//
//   ln((1 - m2) / (1 - m1)) + w/sigma - (w/delta_f) epsilon <= 0.
bool endpoint_condition_from_views(const PrivacyParams& params, double sigma,
                                   double width, const LocationView& at_right,
                                   const LocationView& at_left) {
  const double m1 =
      mass_left(at_right, sigma) + mass_right(at_right, sigma);
  const double m2 = mass_left(at_left, sigma) + mass_right(at_left, sigma);
  if (m1 >= 1.0 || m2 >= 1.0) return false;
  return std::log((1.0 - m2) / (1.0 - m1)) + width / sigma <=
         width * params.epsilon() / params.delta_f();
}

}  // namespace

bool span_condition(const ConstraintConfig& config,
                    const PrivacyParams& params, double sigma, double mu) {
  const LocationView view = config.location_view(mu);
  return span_condition_from_masses(params, sigma, mass_left(view, sigma),
                                    mass_right(view, sigma));
}

bool endpoint_pair_condition(const ConstraintConfig& config,
                             const PrivacyParams& params, double sigma,
                             std::size_t constraint_index) {
  const Interval& c = config.intervals().at(constraint_index);
  if (c.left_infinite() || c.right_infinite()) {
    throw ConfigError("endpoint_pair_condition requires a finite constraint");
  }
  return endpoint_condition_from_views(params, sigma, c.width(),
                                       config.location_view(c.right),
                                       config.location_view(c.left));
}

UniformFeasibility::UniformFeasibility(const ConstraintConfig& config,
                                       const PrivacyParams& params,
                                       int probes_per_span)
    : params_(params) {
  if (probes_per_span < 0) {
    throw ConfigError("probes_per_span must be non-negative");
  }
  const std::vector<Interval>& intervals = config.intervals();
  for (std::size_t k = 0; k < intervals.size(); ++k) {
    const Interval& c = intervals[k];
    if (c.left_infinite() || c.right_infinite()) continue;
    endpoint_cases_.push_back({k, c.width(), config.location_view(c.right),
                               config.location_view(c.left)});
  }

  double outer_lo = 0.0;
  double outer_hi = 0.0;
  bool have_endpoint = false;
  for (const Interval& c : intervals) {
    for (double e : {c.left, c.right}) {
      if (!std::isfinite(e)) continue;
      if (!have_endpoint) {
        outer_lo = outer_hi = e;
        have_endpoint = true;
      } else {
        outer_lo = std::min(outer_lo, e);
        outer_hi = std::max(outer_hi, e);
      }
    }
  }
  const double cutoff = 50.0 * (2.0 * params.base_scale());

  const std::vector<Interval> spans = config.feasible_spans();
  std::vector<std::pair<std::size_t, double>> interior;
  for (std::size_t s = 0; s < spans.size(); ++s) {
    const double lo =
        spans[s].left_infinite() ? outer_lo - cutoff : spans[s].left;
    const double hi =
        spans[s].right_infinite() ? outer_hi + cutoff : spans[s].right;
    // Span endpoints lead the probe list; condition maxima concentrate
    // there, and failing scales are detected after a few evaluations.
    probes_.push_back({s, lo, config.location_view(lo)});
    if (hi != lo) {
      probes_.push_back({s, hi, config.location_view(hi)});
    }
    for (int j = 1; j <= probes_per_span; ++j) {
      const double x = lo + (hi - lo) * j / (probes_per_span + 1.0);
      interior.emplace_back(s, x);
    }
  }
  for (const auto& [s, x] : interior) {
    probes_.push_back({s, x, config.location_view(x)});
  }
}

FeasibilityReport UniformFeasibility::check(double sigma) const {
  if (!(sigma > 0.0)) {
    throw DomainError("feasibility check requires sigma > 0");
  }
  for (const EndpointCase& ec : endpoint_cases_) {
    if (!endpoint_condition_from_views(params_, sigma, ec.width, ec.at_right,
                                       ec.at_left)) {
      return {false,
              FailingCondition{FailingCondition::Kind::kEndpointPair,
                               ec.constraint_index,
                               ec.at_right.mu}};
    }
  }
  for (const Probe& probe : probes_) {
    const double l = mass_left(probe.view, sigma);
    const double r = mass_right(probe.view, sigma);
    if (!span_condition_from_masses(params_, sigma, l, r)) {
      return {false,
              FailingCondition{FailingCondition::Kind::kSpan, probe.span_index,
                               probe.location}};
    }
    // The reflected configuration swaps the mass roles, and its probe set
    // is the mirror image of this one, so it is covered in the same pass.
    if (!span_condition_from_masses(params_, sigma, r, l)) {
      return {false,
              FailingCondition{FailingCondition::Kind::kReflectedSpan,
                               probe.span_index, probe.location}};
    }
  }
  return {true, std::nullopt};
}

FeasibilityReport feasible(const ConstraintConfig& config,
                           const PrivacyParams& params, double sigma) {
  return UniformFeasibility(config, params).check(sigma);
}

UniformPlan optimal_uniform_sigma(const ConstraintConfig& config,
                                  const PrivacyParams& params,
                                  int precision_digits) {
  const ConfigClass cls = config.classify();
  if (cls != ConfigClass::kArbitraryFinite && cls != ConfigClass::kArbitrary &&
      cls != ConfigClass::kEmpty) {
    throw ConfigError(
        "optimal_uniform_sigma applies to finite or mixed configurations");
  }
  if (precision_digits < 0 || precision_digits > 12) {
    throw ConfigError("precision_digits must lie in [0, 12]");
  }

  const double upper = 2.0 * params.base_scale();
  const double step = std::pow(10.0, -precision_digits);
  const long long top = static_cast<long long>(
      std::floor(upper / step + 1e-9));

  const UniformFeasibility checker(config, params);
  double sigma = 0.0;
  if (top >= 1 && checker.check(top * step).feasible) {
    long long lo = 1;
    long long hi = top;
    while (lo < hi) {
      const long long mid = lo + (hi - lo) / 2;
      if (checker.check(mid * step).feasible) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    sigma = lo * step;
  } else if (checker.check(upper).feasible) {
    // The grid top can land short of 2 delta_f/epsilon; the exact bound
    // is always admissible.
    sigma = upper;
  } else {
    throw InternalError(
        "optimal_uniform_sigma: upper bound 2*delta_f/epsilon infeasible");
  }
  return UniformPlan{params, sigma, cls, precision_digits};
}

}  // namespace rangelap
