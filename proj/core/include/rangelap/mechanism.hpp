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

#ifndef RANGELAP_MECHANISM_HPP_
#define RANGELAP_MECHANISM_HPP_

#include <cstddef>
#include <vector>

#include "rangelap/constraints.hpp"
#include "rangelap/laplace.hpp"
#include "rangelap/random.hpp"
#include "rangelap/sigma_plan.hpp"

namespace rangelap {

// One feasible span with its probability mass under the truncated and
// normalized density, plus the mass accumulated before it.
struct Segment {
  Interval span;
  double mass;
  double cumulative_before;
};

// A fully materialized range-adherent mechanism: a Laplace density centred
// on the true query response, truncated to the feasible space and
// normalized, with per-span cumulative masses for analytic inversion.
// Immutable after construction.
class TruncatedLaplace {
 public:
  // Selects the scale via SigmaPlan::compute for the configuration class.
  // Throws InfeasibleLocationError when true_response lies inside a
  // constraint.
  static TruncatedLaplace build(const ConstraintConfig& config,
                                const PrivacyParams& params,
                                double true_response);

  // Same, with the plan supplied by the caller (avoids recomputing
  // binary-search plans when materializing many mechanisms).
  static TruncatedLaplace build(const ConstraintConfig& config,
                                const SigmaPlan& plan, double true_response);

  // Explicit-scale escape hatch; sigma must be positive.
  static TruncatedLaplace with_sigma(const ConstraintConfig& config,
                                     double true_response, double sigma);

  // Normalized density: n * Lap(x | mu, sigma) on feasible points, zero
  // strictly inside a constraint.
  double pdf(double x) const;

  // Piecewise-analytic distribution function: non-decreasing, constant
  // across constraints, 0 at -inf and 1 at +inf.
  double cdf(double x) const;

  // Inverse of cdf on [0, 1]; p = 0 / p = 1 yield the infimum/supremum of
  // the feasible support, which may be infinite. Throws DomainError for p
  // outside [0, 1].
  double quantile(double p) const;

  // Inverse-transform sampling; the result is feasible for every u in
  // [0, 1).
  double sample(double u) const { return quantile(u); }

  // Draws n samples from a seeded stream; bit-reproducible given the
  // stream's seed.
  std::vector<double> sample_many(UniformStream& stream, std::size_t n) const;

  const ConstraintConfig& config() const { return config_; }
  double mu() const { return mu_; }
  double sigma() const { return sigma_; }
  const MassBreakdown& mass() const { return mass_; }
  const std::vector<Segment>& segments() const { return segments_; }

 private:
  TruncatedLaplace(ConstraintConfig config, double mu, double sigma);

  ConstraintConfig config_;
  double mu_;
  double sigma_;
  MassBreakdown mass_;
  std::vector<Segment> segments_;
  double total_mass_;
};

}  // namespace rangelap

#endif  // RANGELAP_MECHANISM_HPP_
