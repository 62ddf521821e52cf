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

#include "rangelap/mechanism.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "rangelap/errors.hpp"

namespace rangelap {

TruncatedLaplace::TruncatedLaplace(ConstraintConfig config, double mu,
                                   double sigma)
    : config_(std::move(config)), mu_(mu), sigma_(sigma), mass_{}, total_mass_(0.0) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw DomainError("mechanism requires a positive finite sigma");
  }
  const LocationView view = config_.location_view(mu);
  mass_ = normalization(view, sigma);

  const LaplaceParams lp{mu_, sigma_};
  double cumulative = 0.0;
  for (const Interval& span : config_.feasible_spans()) {
    const double m = mass_.norm * laplace_mass(span.left, span.right, lp);
    segments_.push_back({span, m, cumulative});
    cumulative += m;
  }
  total_mass_ = cumulative;
}

TruncatedLaplace TruncatedLaplace::build(const ConstraintConfig& config,
                                         const PrivacyParams& params,
                                         double true_response) {
  return build(config, SigmaPlan::compute(config, params), true_response);
}

TruncatedLaplace TruncatedLaplace::build(const ConstraintConfig& config,
                                         const SigmaPlan& plan,
                                         double true_response) {
  return TruncatedLaplace(config, true_response, plan.sigma_at(true_response));
}

TruncatedLaplace TruncatedLaplace::with_sigma(const ConstraintConfig& config,
                                              double true_response,
                                              double sigma) {
  return TruncatedLaplace(config, true_response, sigma);
}

double TruncatedLaplace::pdf(double x) const {
  if (std::isnan(x) || !config_.is_feasible(x)) return 0.0;
  return mass_.norm * laplace_pdf(x, {mu_, sigma_});
}

double TruncatedLaplace::cdf(double x) const {
  if (std::isnan(x)) return std::numeric_limits<double>::quiet_NaN();
  const LaplaceParams lp{mu_, sigma_};
  double acc = 0.0;
  for (const Segment& seg : segments_) {
    if (x >= seg.span.right) {
      acc += seg.mass;
    } else if (x > seg.span.left) {
      acc += mass_.norm * laplace_mass(seg.span.left, x, lp);
      break;
    } else {
      break;
    }
  }
  return std::min(acc, 1.0);
}

double TruncatedLaplace::quantile(double p) const {
  if (std::isnan(p) || p < 0.0 || p > 1.0) {
    throw DomainError("quantile requires p in [0, 1]");
  }
  if (p == 0.0) return segments_.front().span.left;
  if (p >= total_mass_) return segments_.back().span.right;

  // Last segment whose cumulative_before does not exceed p.
  std::size_t idx = segments_.size() - 1;
  for (std::size_t j = 1; j < segments_.size(); ++j) {
    if (segments_[j].cumulative_before > p) {
      idx = j - 1;
      break;
    }
  }
  const Segment& seg = segments_[idx];
  const LaplaceParams lp{mu_, sigma_};
  const double q =
      laplace_cdf(seg.span.left, lp) + (p - seg.cumulative_before) / mass_.norm;
  const double x = laplace_quantile(q, lp);
  return std::clamp(x, seg.span.left, seg.span.right);
}

std::vector<double> TruncatedLaplace::sample_many(UniformStream& stream,
                                                  std::size_t n) const {
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    out.push_back(sample(stream.next()));
  }
  return out;
}

}  // namespace rangelap
