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

#ifndef RANGELAP_LAPLACE_HPP_
#define RANGELAP_LAPLACE_HPP_

#include "rangelap/constraints.hpp"

namespace rangelap {

// Location/scale pair of a Laplace distribution; sigma must be positive.
struct LaplaceParams {
  double mu;
  double sigma;
};

// Density e^{-|mu-x|/sigma} / (2 sigma).
double laplace_pdf(double x, const LaplaceParams& p);

// Cumulative distribution 1/2 + (1/2) sgn(x-mu) (1 - e^{-|mu-x|/sigma}).
// Accepts x = +-inf and returns the corresponding limit 1 or 0.
double laplace_cdf(double x, const LaplaceParams& p);

// Inverse of laplace_cdf on (0, 1); q = 0 and q = 1 map to -inf / +inf.
double laplace_quantile(double q, const LaplaceParams& p);

// Probability mass of (a, b) under Lap(mu, sigma), evaluated from
// one-sided exponentials so that far-from-mu intervals do not cancel.
double laplace_mass(double a, double b, const LaplaceParams& p);

// Probability mass removed by truncation, split by side of the location
// parameter, and the resulting normalization factor.
struct MassBreakdown {
  double left;   // total constraint mass below mu
  double right;  // total constraint mass above mu
  double norm;   // 1 / (1 - (left + right)), >= 1
};

// Sum of constraint integrals below mu: one CDF difference per finite
// constraint plus the tail integral when a constraint spans to -inf.
double mass_left(const LocationView& view, double sigma);

// Mirror image of mass_left for constraints above mu.
double mass_right(const LocationView& view, double sigma);

// Combines both sides into the normalization factor. Throws InternalError
// when the surviving mass drops to 1e-12 or below, which no valid
// configuration can produce.
MassBreakdown normalization(const LocationView& view, double sigma);

}  // namespace rangelap

#endif  // RANGELAP_LAPLACE_HPP_
