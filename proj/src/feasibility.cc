// Copyright 2026 The coordplan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coordplan/feasibility.h"

#include <algorithm>
#include <cmath>

#include "coordplan/search2d.h"

namespace coordplan {
namespace {

constexpr double kMonotoneSlack = 1e-12;

double EndSlack(double s) { return kGeometryTolerance * std::max(1.0, s); }

}  // namespace

std::string_view ViolationKindName(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::kConflict: return "conflict";
    case Violation::Kind::kNonMonotone: return "non_monotone";
    case Violation::Kind::kBadStart: return "bad_start";
    case Violation::Kind::kBadGoal: return "bad_goal";
    case Violation::Kind::kMissingAxis: return "missing_axis";
  }
  return "unknown";
}

FeasibilityReport ValidateFeasibility(const Trajectory& traj,
                                      const ConflictSet& conflicts,
                                      const std::vector<double>& path_lengths) {
  FeasibilityReport report;
  const auto& w = traj.waypoints();
  report.segments_checked = traj.num_segments();

  for (int v = 0; v < static_cast<int>(path_lengths.size()); ++v) {
    const auto a = traj.AxisOf(v);
    if (!a) {
      report.violations.push_back({Violation::Kind::kMissingAxis, 0, 0, v,
                                   "vehicle has no trajectory axis"});
      continue;
    }
    if (std::abs(w.front()[*a]) > EndSlack(path_lengths[v])) {
      report.violations.push_back({Violation::Kind::kBadStart, 0, 0, v,
                                   "vehicle does not start at 0"});
    }
    if (std::abs(w.back()[*a] - path_lengths[v]) > EndSlack(path_lengths[v])) {
      report.violations.push_back({Violation::Kind::kBadGoal, w.size() - 1, 0,
                                   v, "vehicle does not end at its path length"});
    }
  }

  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    for (std::size_t a = 0; a < traj.dim(); ++a) {
      if (w[k + 1][a] - w[k][a] < -kMonotoneSlack) {
        report.violations.push_back({Violation::Kind::kNonMonotone, k, 0,
                                     traj.axes()[a], "component decreases"});
      }
    }
  }

  const auto& rects = conflicts.rects();
  for (std::size_t r = 0; r < rects.size(); ++r) {
    const ConflictRect& c = rects[r];
    const auto ai = traj.AxisOf(c.i);
    const auto aj = traj.AxisOf(c.j);
    if (!ai || !aj) continue;
    ++report.rects_checked;
    const Rect box{c.lo_i, c.hi_i, c.lo_j, c.hi_j};
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      const Point2 p{w[k][*ai], w[k][*aj]};
      const Point2 q{w[k + 1][*ai], w[k + 1][*aj]};
      if (!SegmentClear(p, q, std::span<const Rect>(&box, 1))) {
        report.violations.push_back(
            {Violation::Kind::kConflict, k, r, -1,
             "vehicles " + std::to_string(c.i) + " and " +
                 std::to_string(c.j) + " inside conflict " +
                 std::to_string(c.k) + " together"});
      }
    }
  }
  return report;
}

}  // namespace coordplan
