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

#include "rangelap/constraints.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "rangelap/errors.hpp"

namespace rangelap {

PrivacyParams::PrivacyParams(double epsilon, double delta_f)
    : epsilon_(epsilon), delta_f_(delta_f) {
  if (!(std::isfinite(epsilon) && epsilon > 0.0)) {
    throw ConfigError("epsilon must be a positive finite real");
  }
  if (!(std::isfinite(delta_f) && delta_f > 0.0)) {
    throw ConfigError("delta_f must be a positive finite real");
  }
}

ConstraintConfig::ConstraintConfig(std::vector<Interval> sorted)
    : intervals_(std::move(sorted)) {}

ConstraintConfig ConstraintConfig::normalized(std::vector<Interval> raw) {
  for (const Interval& iv : raw) {
    if (std::isnan(iv.left) || std::isnan(iv.right)) {
      throw ConfigError("constraint endpoints must not be NaN");
    }
    if (!(iv.left < iv.right)) {
      throw ConfigError("constraint requires left < right");
    }
    if (iv.left_infinite() && iv.right_infinite()) {
      throw ConfigError("constraint covering the whole line is invalid");
    }
  }
  std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
    return a.left < b.left || (a.left == b.left && a.right < b.right);
  });
  std::vector<Interval> merged;
  for (const Interval& iv : raw) {
    if (!merged.empty() && iv.left <= merged.back().right) {
      merged.back().right = std::max(merged.back().right, iv.right);
    } else {
      merged.push_back(iv);
    }
  }
  if (merged.size() == 1 && merged.front().left_infinite() &&
      merged.front().right_infinite()) {
    throw ConfigError("constraints leave no feasible space");
  }
  return ConstraintConfig(std::move(merged));
}

bool ConstraintConfig::has_left_tail() const {
  return !intervals_.empty() && intervals_.front().left_infinite();
}

bool ConstraintConfig::has_right_tail() const {
  return !intervals_.empty() && intervals_.back().right_infinite();
}

ConfigClass ConstraintConfig::classify() const {
  if (intervals_.empty()) return ConfigClass::kEmpty;
  const bool any_infinite = has_left_tail() || has_right_tail();
  if (intervals_.size() == 1 && any_infinite) {
    return ConfigClass::kSingleInfinite;
  }
  return any_infinite ? ConfigClass::kArbitrary : ConfigClass::kArbitraryFinite;
}

std::vector<Interval> ConstraintConfig::feasible_spans() const {
  std::vector<Interval> spans;
  double cursor = -kInf;
  for (const Interval& iv : intervals_) {
    if (iv.left > cursor) {
      spans.push_back({cursor, iv.left});
    }
    cursor = iv.right;
  }
  if (cursor < kInf) {
    spans.push_back({cursor, kInf});
  }
  return spans;
}

bool ConstraintConfig::is_feasible(double x) const {
  if (std::isnan(x)) return false;
  for (const Interval& iv : intervals_) {
    if (iv.contains(x)) return false;
    if (iv.left > x) break;
  }
  return true;
}

LocationView ConstraintConfig::location_view(double mu) const {
  if (!std::isfinite(mu)) {
    throw InfeasibleLocationError("location parameter must be finite");
  }
  LocationView view;
  view.mu = mu;
  for (const Interval& iv : intervals_) {
    if (iv.contains(mu)) {
      throw InfeasibleLocationError(
          "location parameter lies strictly inside a constraint");
    }
    if (iv.left_infinite()) {
      view.left_tail_gap = mu - iv.right;
    } else if (iv.right_infinite()) {
      view.right_tail_gap = iv.left - mu;
    } else if (iv.right <= mu) {
      view.left.push_back({mu - iv.left, mu - iv.right});
    } else {
      view.right.push_back({iv.left - mu, iv.right - mu});
    }
  }
  return view;
}

ConstraintConfig ConstraintConfig::reflected() const {
  std::vector<Interval> out;
  out.reserve(intervals_.size());
  for (auto it = intervals_.rbegin(); it != intervals_.rend(); ++it) {
    out.push_back({-it->right, -it->left});
  }
  return ConstraintConfig(std::move(out));
}

}  // namespace rangelap
