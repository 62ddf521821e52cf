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

#ifndef RANGELAP_VERIFIER_HPP_
#define RANGELAP_VERIFIER_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "rangelap/constraints.hpp"
#include "rangelap/sigma_plan.hpp"

namespace rangelap {

// Relative slack on the guarantee bound absorbing double rounding; two
// orders above the error observed on the tight single-infinite case.
inline constexpr double kGuaranteeSlack = 1e-9;

// Failures stored verbatim in a report; the worst one is always kept.
inline constexpr std::size_t kMaxStoredFailures = 4096;

// One densities-ratio check of the guarantee between two mechanism
// locations f1 >= f2 at output point x. The pair must stay within a
// factor e^{i epsilon} of each other in both directions, where i is their
// separation measured in units of delta_f.
struct GuaranteeEvaluation {
  double f1;
  double f2;
  double i;
  double x;
  double ratio_forward;   // density at f1's mechanism over f2's
  double ratio_backward;  // the reverse direction
  double bound;           // e^{i epsilon}
  bool pass;
};

struct VerificationReport {
  std::size_t total_checks = 0;
  std::vector<GuaranteeEvaluation> failures;  // capped at kMaxStoredFailures
  std::optional<GuaranteeEvaluation> worst;   // argmax of ratio over bound
  double max_ratio_over_bound = 0.0;
};

// Builds both mechanisms under the plan and checks the density ratio at x
// in both directions. When x falls inside a constraint both densities are
// zero and the evaluation passes vacuously. Throws InfeasibleLocationError
// for infeasible locations and DomainError when f1 < f2.
GuaranteeEvaluation evaluate_pair(const ConstraintConfig& config,
                                  const PrivacyParams& params,
                                  const SigmaPlan& plan, double f1, double f2,
                                  double x);

// Exhaustive grid certification: locations cover every feasible span and
// every constraint endpoint (with extra points clustered next to
// endpoints, where violations surface first), with pair separations up to
// max_i * delta_f; outputs cover the feasible space out to 50 sigma past
// the extreme locations and always include every constraint endpoint and
// both locations of the pair under test.
VerificationReport verify_grid(const ConstraintConfig& config,
                               const PrivacyParams& params,
                               const SigmaPlan& plan, std::size_t n_locations,
                               std::size_t n_outputs, double max_i);

// Reproducible failure of the uncorrected scale delta_f/epsilon on a
// constraint spanning to -inf: one location on the constraint boundary,
// the other delta_f above it, output at the boundary. The reported
// forward ratio is the boundary mechanism's density over the displaced
// one, the direction that exceeds the bound by a factor
// (2 e^{epsilon} - 1) / e^{epsilon}.
GuaranteeEvaluation naive_violation_demo(const PrivacyParams& params);

}  // namespace rangelap

#endif  // RANGELAP_VERIFIER_HPP_
