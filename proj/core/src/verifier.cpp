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

#include "rangelap/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "rangelap/errors.hpp"
#include "rangelap/mechanism.hpp"

namespace rangelap {
namespace {

GuaranteeEvaluation evaluate_mechanisms(const TruncatedLaplace& mech1,
                                        const TruncatedLaplace& mech2,
                                        double i, double bound, double x) {
  GuaranteeEvaluation ev{};
  ev.f1 = mech1.mu();
  ev.f2 = mech2.mu();
  ev.i = i;
  ev.x = x;
  ev.bound = bound;
  const double p1 = mech1.pdf(x);
  const double p2 = mech2.pdf(x);
  if (p1 == 0.0 && p2 == 0.0) {
    // Both mechanisms share the feasible space; x inside a constraint is
    // vacuous.
    ev.ratio_forward = 0.0;
    ev.ratio_backward = 0.0;
    ev.pass = true;
    return ev;
  }
  ev.ratio_forward = p1 / p2;
  ev.ratio_backward = p2 / p1;
  const double limit = bound * (1.0 + kGuaranteeSlack);
  ev.pass = ev.ratio_forward <= limit && ev.ratio_backward <= limit;
  return ev;
}

double over_bound(const GuaranteeEvaluation& ev) {
  return std::max(ev.ratio_forward, ev.ratio_backward) / ev.bound;
}

void record(VerificationReport& report, const GuaranteeEvaluation& ev) {
  ++report.total_checks;
  const double over = over_bound(ev);
  report.max_ratio_over_bound = std::max(report.max_ratio_over_bound, over);
  if (!ev.pass) {
    if (!report.worst || over > over_bound(*report.worst)) {
      report.worst = ev;
    }
    if (report.failures.size() < kMaxStoredFailures) {
      report.failures.push_back(ev);
    }
  }
}

void append_linspace(std::vector<double>& out, double lo, double hi,
                     std::size_t count) {
  if (count == 0 || !(hi > lo)) {
    out.push_back(lo);
    return;
  }
  if (count == 1) {
    out.push_back(0.5 * (lo + hi));
    return;
  }
  for (std::size_t j = 0; j < count; ++j) {
    out.push_back(lo + (hi - lo) * static_cast<double>(j) /
                           static_cast<double>(count - 1));
  }
}

void sort_dedupe(std::vector<double>& xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

// Clips one feasible span to a finite window: unbounded ends stop `reach`
// past the given reference point.
Interval clip_span(const Interval& span, double reach, double lo_ref,
                   double hi_ref) {
  double lo = span.left;
  double hi = span.right;
  if (span.left_infinite()) lo = std::min(lo_ref, hi) - reach;
  if (span.right_infinite()) hi = std::max(hi_ref, lo) + reach;
  return {lo, hi};
}

std::vector<double> location_grid(const ConstraintConfig& config,
                                  const PrivacyParams& params,
                                  std::size_t n_locations, double max_i) {
  const double reach = max_i * params.delta_f();
  const std::vector<Interval> spans = config.feasible_spans();

  std::vector<Interval> windows;
  double total_width = 0.0;
  for (const Interval& span : spans) {
    Interval w = span;
    if (w.left_infinite() && w.right_infinite()) {
      w = {-0.5 * reach, 0.5 * reach};
    } else {
      w = clip_span(w, reach, w.right, w.left);
    }
    windows.push_back(w);
    total_width += w.width();
  }

  std::vector<double> points;
  for (const Interval& w : windows) {
    const auto share = static_cast<std::size_t>(std::ceil(
        static_cast<double>(n_locations) * w.width() / total_width));
    append_linspace(points, w.left, w.right, std::max<std::size_t>(2, share));
  }
  // Cluster extra locations next to each finite endpoint: violations of a
  // too-small scale first appear between nearby locations there.
  for (const Interval& c : config.intervals()) {
    for (double e : {c.left, c.right}) {
      if (!std::isfinite(e)) continue;
      for (double frac : {0.01, 0.05, 0.25, 1.0}) {
        for (double candidate :
             {e - frac * params.delta_f(), e + frac * params.delta_f()}) {
          if (config.is_feasible(candidate)) points.push_back(candidate);
        }
      }
    }
  }
  sort_dedupe(points);
  return points;
}

std::vector<double> output_grid(const ConstraintConfig& config,
                                std::size_t n_outputs, double window_lo,
                                double window_hi) {
  std::vector<Interval> windows;
  double total_width = 0.0;
  for (const Interval& span : config.feasible_spans()) {
    const double lo = std::max(span.left, window_lo);
    const double hi = std::min(span.right, window_hi);
    if (!(hi > lo)) continue;
    windows.push_back({lo, hi});
    total_width += hi - lo;
  }
  std::vector<double> points;
  for (const Interval& w : windows) {
    const auto share = static_cast<std::size_t>(std::ceil(
        static_cast<double>(n_outputs) * w.width() / total_width));
    append_linspace(points, w.left, w.right, std::max<std::size_t>(2, share));
  }
  for (const Interval& c : config.intervals()) {
    if (std::isfinite(c.left)) points.push_back(c.left);
    if (std::isfinite(c.right)) points.push_back(c.right);
  }
  sort_dedupe(points);
  return points;
}

}  // namespace

GuaranteeEvaluation evaluate_pair(const ConstraintConfig& config,
                                  const PrivacyParams& params,
                                  const SigmaPlan& plan, double f1, double f2,
                                  double x) {
  if (!(f1 >= f2)) {
    throw DomainError("evaluate_pair requires f1 >= f2");
  }
  const TruncatedLaplace mech1 = TruncatedLaplace::build(config, plan, f1);
  const TruncatedLaplace mech2 = TruncatedLaplace::build(config, plan, f2);
  const double i = (f1 - f2) / params.delta_f();
  return evaluate_mechanisms(mech1, mech2, i, std::exp(i * params.epsilon()),
                             x);
}

VerificationReport verify_grid(const ConstraintConfig& config,
                               const PrivacyParams& params,
                               const SigmaPlan& plan, std::size_t n_locations,
                               std::size_t n_outputs, double max_i) {
  if (n_locations < 2 || n_outputs < 2) {
    throw ConfigError("verify_grid requires at least 2 locations and outputs");
  }
  if (!(max_i > 0.0)) {
    throw ConfigError("verify_grid requires max_i > 0");
  }

  const std::vector<double> locations =
      location_grid(config, params, n_locations, max_i);

  std::vector<TruncatedLaplace> mechs;
  mechs.reserve(locations.size());
  double sigma_max = 0.0;
  for (double f : locations) {
    mechs.push_back(TruncatedLaplace::build(config, plan, f));
    sigma_max = std::max(sigma_max, mechs.back().sigma());
  }

  const double window_lo = locations.front() - 50.0 * sigma_max;
  const double window_hi = locations.back() + 50.0 * sigma_max;
  const std::vector<double> outputs =
      output_grid(config, n_outputs, window_lo, window_hi);

  VerificationReport report;
  for (std::size_t a = 0; a < locations.size(); ++a) {
    for (std::size_t b = 0; b <= a; ++b) {
      // f1 = locations[a] >= f2 = locations[b].
      const double i = (locations[a] - locations[b]) / params.delta_f();
      const double bound = std::exp(i * params.epsilon());
      for (double x : outputs) {
        record(report, evaluate_mechanisms(mechs[a], mechs[b], i, bound, x));
      }
      record(report, evaluate_mechanisms(mechs[a], mechs[b], i, bound,
                                         locations[a]));
      record(report, evaluate_mechanisms(mechs[a], mechs[b], i, bound,
                                         locations[b]));
    }
  }
  return report;
}

GuaranteeEvaluation naive_violation_demo(const PrivacyParams& params) {
  const ConstraintConfig config =
      ConstraintConfig::normalized({{-kInf, 0.0}});
  const SigmaPlan plan = SigmaPlan::naive(config, params);
  const double f2 = 0.0;
  const double f1 = params.delta_f();
  GuaranteeEvaluation ev = evaluate_pair(config, params, plan, f1, f2, f2);
  // Present the boundary-over-displaced direction, the one the naive
  // scale breaks, as the forward ratio.
  std::swap(ev.ratio_forward, ev.ratio_backward);
  return ev;
}

}  // namespace rangelap
