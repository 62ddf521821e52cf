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

#ifndef RANGELAP_CONSTRAINTS_HPP_
#define RANGELAP_CONSTRAINTS_HPP_

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

namespace rangelap {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// An open interval (left, right) of the response line. Endpoints may be
// -inf / +inf, but not both at once. Used both for infeasible constraints
// and for the feasible spans between them.
struct Interval {
  double left;
  double right;

  bool left_infinite() const { return left == -kInf; }
  bool right_infinite() const { return right == kInf; }
  double width() const { return right - left; }
  // Open-interval membership: endpoints do not belong to the interval.
  bool contains(double x) const { return x > left && x < right; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

// The custodian's privacy budget and the query's sensitivity. Both must be
// positive, finite reals.
class PrivacyParams {
 public:
  PrivacyParams(double epsilon, double delta_f);

  double epsilon() const { return epsilon_; }
  double delta_f() const { return delta_f_; }
  // The scale of the standard (unconstrained) Laplace mechanism.
  double base_scale() const { return delta_f_ / epsilon_; }

 private:
  double epsilon_;
  double delta_f_;
};

enum class ConfigClass {
  kEmpty,            // no constraints
  kSingleInfinite,   // one constraint, infinite on one side
  kArbitraryFinite,  // one or more constraints, all finite
  kArbitrary,        // anything else
};

// Distances from a location parameter to a finite constraint's endpoints.
struct ConstraintDistances {
  double to_left;   // |mu - left endpoint|
  double to_right;  // |mu - right endpoint|
};

// All constraint endpoint distances seen from one location parameter.
// Finite constraints are split by side; constraints reaching an infinity
// contribute a single gap to their finite endpoint.
struct LocationView {
  double mu = 0.0;
  std::vector<ConstraintDistances> left;   // to_left > to_right
  std::vector<ConstraintDistances> right;  // to_right > to_left
  std::optional<double> left_tail_gap;     // to the end of (-inf, b)
  std::optional<double> right_tail_gap;    // to the start of (a, +inf)
};

// A validated set of infeasible ranges: sorted, pairwise disjoint open
// intervals separated by strictly positive gaps, whose complement (the
// feasible space) is nonempty with positive total length. Constraint
// endpoints themselves count as feasible.
class ConstraintConfig {
 public:
  // Sorts, merges overlapping or touching intervals, and validates.
  // Throws ConfigError on NaN endpoints, inverted intervals, or when the
  // merged union leaves no feasible space.
  static ConstraintConfig normalized(std::vector<Interval> raw);

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }
  std::size_t size() const { return intervals_.size(); }

  // Presence of a constraint spanning to -inf / +inf.
  bool has_left_tail() const;
  bool has_right_tail() const;

  ConfigClass classify() const;

  // The complement of the constraint union as maximal disjoint intervals
  // in increasing order.
  std::vector<Interval> feasible_spans() const;

  // True unless x lies strictly inside a constraint.
  bool is_feasible(double x) const;

  // Distances from mu to every constraint. Throws InfeasibleLocationError
  // when mu is strictly inside a constraint.
  LocationView location_view(double mu) const;

  // Maps every interval (a, b) to (-b, -a). An involution.
  ConstraintConfig reflected() const;

  friend bool operator==(const ConstraintConfig&,
                         const ConstraintConfig&) = default;

 private:
  explicit ConstraintConfig(std::vector<Interval> sorted);

  std::vector<Interval> intervals_;
};

}  // namespace rangelap

#endif  // RANGELAP_CONSTRAINTS_HPP_
