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

#include "rangelap/laplace.hpp"

#include <cmath>

#include "rangelap/errors.hpp"

namespace rangelap {

double laplace_pdf(double x, const LaplaceParams& p) {
  return std::exp(-std::abs(p.mu - x) / p.sigma) / (2.0 * p.sigma);
}

double laplace_cdf(double x, const LaplaceParams& p) {
  if (x == p.mu) return 0.5;
  const double tail = 0.5 * std::exp(-std::abs(p.mu - x) / p.sigma);
  return x > p.mu ? 1.0 - tail : tail;
}

double laplace_quantile(double q, const LaplaceParams& p) {
  if (q < 0.5) {
    return p.mu + p.sigma * std::log(2.0 * q);
  }
  if (q > 0.5) {
    return p.mu - p.sigma * std::log(2.0 * (1.0 - q));
  }
  return p.mu;
}

double laplace_mass(double a, double b, const LaplaceParams& p) {
  if (b <= a) return 0.0;
  if (b <= p.mu) {  // entirely below mu
    return 0.5 * (std::exp(-(p.mu - b) / p.sigma) -
                  std::exp(-(p.mu - a) / p.sigma));
  }
  if (a >= p.mu) {  // entirely above mu
    return 0.5 * (std::exp(-(a - p.mu) / p.sigma) -
                  std::exp(-(b - p.mu) / p.sigma));
  }
  return 1.0 - 0.5 * (std::exp(-(p.mu - a) / p.sigma) +
                      std::exp(-(b - p.mu) / p.sigma));
}

double mass_left(const LocationView& view, double sigma) {
  double total = 0.0;
  for (const ConstraintDistances& d : view.left) {
    total += 0.5 * (std::exp(-d.to_right / sigma) - std::exp(-d.to_left / sigma));
  }
  if (view.left_tail_gap) {
    total += 0.5 * std::exp(-*view.left_tail_gap / sigma);
  }
  return total;
}

double mass_right(const LocationView& view, double sigma) {
  double total = 0.0;
  for (const ConstraintDistances& d : view.right) {
    total += 0.5 * (std::exp(-d.to_left / sigma) - std::exp(-d.to_right / sigma));
  }
  if (view.right_tail_gap) {
    total += 0.5 * std::exp(-*view.right_tail_gap / sigma);
  }
  return total;
}

MassBreakdown normalization(const LocationView& view, double sigma) {
  const double l = mass_left(view, sigma);
  const double r = mass_right(view, sigma);
  const double surviving = 1.0 - (l + r);
  if (surviving <= 1e-12) {
    throw InternalError("normalization: truncation removed all mass");
  }
  return MassBreakdown{l, r, 1.0 / surviving};
}

}  // namespace rangelap
