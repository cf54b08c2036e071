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

#include "coordplan/trajectory.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "coordplan/error.h"

namespace coordplan {
namespace {

double SegmentNorm(const std::vector<double>& a, const std::vector<double>& b) {
  double sq = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = b[k] - a[k];
    sq += d * d;
  }
  return std::sqrt(sq);
}

// a + t (b - a), kept inside [min(a, b), max(a, b)] despite rounding.
double Lerp(double a, double b, double t) {
  const double v = a + t * (b - a);
  return std::clamp(v, std::min(a, b), std::max(a, b));
}

// Arc length at which component `axis` of segment k reaches `value`. The
// segment must bracket the value.
double InvertOnSegment(const Trajectory& traj, std::size_t axis, std::size_t k,
                       double value) {
  const auto& w = traj.waypoints();
  const auto& cum = traj.breakpoints();
  const double c0 = w[k][axis];
  const double c1 = w[k + 1][axis];
  const double t = std::clamp((value - c0) / (c1 - c0), 0.0, 1.0);
  return Lerp(cum[k], cum[k + 1], t);
}

}  // namespace

Trajectory::Trajectory(std::vector<int> axes,
                       std::vector<std::vector<double>> waypoints)
    : axes_(std::move(axes)) {
  if (waypoints.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "trajectory has no waypoints");
  }
  if (std::set<int>(axes_.begin(), axes_.end()).size() != axes_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "duplicate trajectory axis");
  }
  for (auto& w : waypoints) {
    if (w.size() != axes_.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "waypoint dimension does not match axis count");
    }
    if (!waypoints_.empty() && waypoints_.back() == w) continue;
    waypoints_.push_back(std::move(w));
  }
  cum_.assign(waypoints_.size(), 0.0);
  for (std::size_t k = 1; k < waypoints_.size(); ++k) {
    cum_[k] = cum_[k - 1] + SegmentNorm(waypoints_[k - 1], waypoints_[k]);
  }
}

Trajectory Trajectory::ForVehicle(int vehicle, double path_length) {
  return Trajectory({vehicle}, {{0.0}, {path_length}});
}

std::optional<std::size_t> Trajectory::AxisOf(int vehicle) const {
  for (std::size_t a = 0; a < axes_.size(); ++a) {
    if (axes_[a] == vehicle) return a;
  }
  return std::nullopt;
}

std::vector<double> Trajectory::At(double ell) const {
  if (!(ell > 0.0)) return waypoints_.front();
  if (ell >= length()) return waypoints_.back();
  const auto it = std::upper_bound(cum_.begin(), cum_.end(), ell);
  const std::size_t k = static_cast<std::size_t>(it - cum_.begin()) - 1;
  if (cum_[k] == ell) return waypoints_[k];
  const double t = (ell - cum_[k]) / (cum_[k + 1] - cum_[k]);
  std::vector<double> out(dim());
  for (std::size_t a = 0; a < dim(); ++a) {
    out[a] = Lerp(waypoints_[k][a], waypoints_[k + 1][a], t);
  }
  return out;
}

double Trajectory::ComponentAt(std::size_t axis, double ell) const {
  return At(ell)[axis];
}

Trajectory Trajectory::Canonical() const {
  std::vector<std::size_t> perm(dim());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t a, std::size_t b) { return axes_[a] < axes_[b]; });
  std::vector<int> axes(dim());
  for (std::size_t a = 0; a < dim(); ++a) axes[a] = axes_[perm[a]];
  std::vector<std::vector<double>> pts;
  pts.reserve(waypoints_.size());
  for (const auto& w : waypoints_) {
    std::vector<double> p(dim());
    for (std::size_t a = 0; a < dim(); ++a) p[a] = w[perm[a]];
    pts.push_back(std::move(p));
  }
  return Trajectory(std::move(axes), std::move(pts));
}

double TrajectoryLength(const Trajectory& traj) { return traj.length(); }

std::optional<Interval> ProjectInterval(const Trajectory& traj,
                                        std::size_t axis, Interval range) {
  const auto& w = traj.waypoints();
  const std::size_t last = w.size() - 1;
  if (w[last][axis] < range.lo || w[0][axis] > range.hi) return std::nullopt;

  Interval out{0.0, traj.length()};
  // First ell with component >= lo.
  std::size_t m = 0;
  while (w[m][axis] < range.lo) ++m;
  if (m > 0) out.lo = InvertOnSegment(traj, axis, m - 1, range.lo);
  // Last ell with component <= hi.
  std::size_t h = last;
  while (w[h][axis] > range.hi) --h;
  if (h < last) out.hi = InvertOnSegment(traj, axis, h, range.hi);
  return out;
}

std::optional<Interval> OccupancyInterval(const Trajectory& traj,
                                          std::size_t axis, Interval range) {
  const auto& w = traj.waypoints();
  const std::size_t last = w.size() - 1;
  if (w[last][axis] <= range.lo || w[0][axis] >= range.hi) return std::nullopt;

  Interval out{0.0, traj.length()};
  // Last ell with component <= lo.
  if (w[0][axis] <= range.lo) {
    std::size_t m = last;
    while (w[m][axis] > range.lo) --m;
    out.lo = InvertOnSegment(traj, axis, m, range.lo);
  }
  // First ell with component >= hi.
  if (w[last][axis] >= range.hi) {
    std::size_t m = 0;
    while (w[m][axis] < range.hi) ++m;
    out.hi = InvertOnSegment(traj, axis, m - 1, range.hi);
  }
  if (!(out.lo < out.hi)) return std::nullopt;
  return out;
}

std::vector<Rect> ProjectConflicts(const Trajectory& left,
                                   const Trajectory& right,
                                   const ConflictSet& conflicts) {
  std::vector<Rect> out;
  for (const ConflictRect& c : conflicts.rects()) {
    std::optional<std::size_t> lx = left.AxisOf(c.i);
    std::optional<std::size_t> ry = right.AxisOf(c.j);
    Interval x_range{c.lo_i, c.hi_i};
    Interval y_range{c.lo_j, c.hi_j};
    if (!lx || !ry) {
      lx = left.AxisOf(c.j);
      ry = right.AxisOf(c.i);
      std::swap(x_range, y_range);
    }
    if (!lx || !ry) continue;
    const auto x = OccupancyInterval(left, *lx, x_range);
    const auto y = OccupancyInterval(right, *ry, y_range);
    if (!x || !y) continue;
    out.push_back({x->lo, x->hi, y->lo, y->hi});
  }
  return out;
}

Trajectory Lift(const Trajectory& x_side, const Trajectory& y_side,
                const Polyline2& sub) {
  const double lx = x_side.length();
  const double ly = y_side.length();
  const double slack = 1e-9 * std::max(1.0, std::max(lx, ly));
  if (sub.size() < 2 || std::abs(sub.front().x) > slack ||
      std::abs(sub.front().y) > slack || std::abs(sub.back().x - lx) > slack ||
      std::abs(sub.back().y - ly) > slack) {
    throw Error(ErrorCode::kSpanMismatch,
                "sub-path must run from (0, 0) to (" + std::to_string(lx) +
                    ", " + std::to_string(ly) + ")");
  }
  Polyline2 pts = sub;
  for (Point2& p : pts) {
    p.x = std::clamp(p.x, 0.0, lx);
    p.y = std::clamp(p.y, 0.0, ly);
  }
  pts.front() = {0.0, 0.0};
  pts.back() = {lx, ly};

  std::vector<int> axes = x_side.axes();
  axes.insert(axes.end(), y_side.axes().begin(), y_side.axes().end());

  auto emit = [&](double ex, double ey) {
    std::vector<double> p = x_side.At(ex);
    const std::vector<double> q = y_side.At(ey);
    p.insert(p.end(), q.begin(), q.end());
    return p;
  };

  struct Event {
    double t;
    double x;
    double y;
  };
  std::vector<std::vector<double>> out;
  out.push_back(emit(0.0, 0.0));
  const auto& bx = x_side.breakpoints();
  const auto& by = y_side.breakpoints();
  for (std::size_t k = 1; k < pts.size(); ++k) {
    const Point2 p0 = pts[k - 1];
    const Point2 p1 = pts[k];
    std::vector<Event> events;
    if (p1.x > p0.x) {
      for (auto it = std::upper_bound(bx.begin(), bx.end(), p0.x);
           it != bx.end() && *it < p1.x; ++it) {
        const double t = (*it - p0.x) / (p1.x - p0.x);
        events.push_back({t, *it, Lerp(p0.y, p1.y, t)});
      }
    }
    if (p1.y > p0.y) {
      for (auto it = std::upper_bound(by.begin(), by.end(), p0.y);
           it != by.end() && *it < p1.y; ++it) {
        const double t = (*it - p0.y) / (p1.y - p0.y);
        events.push_back({t, Lerp(p0.x, p1.x, t), *it});
      }
    }
    std::sort(events.begin(), events.end(),
              [](const Event& a, const Event& b) { return a.t < b.t; });
    double prev_x = p0.x;
    double prev_y = p0.y;
    for (const Event& e : events) {
      // Keep the lifted curve monotone even where two events nearly coincide.
      const double ex = std::max(prev_x, e.x);
      const double ey = std::max(prev_y, e.y);
      out.push_back(emit(ex, ey));
      prev_x = ex;
      prev_y = ey;
    }
    out.push_back(emit(p1.x, p1.y));
  }
  return Trajectory(std::move(axes), std::move(out));
}

Trajectory LiftVehicle(const Trajectory& traj, const Polyline2& sub,
                       int new_vehicle, double new_path_length) {
  return Lift(Trajectory::ForVehicle(new_vehicle, new_path_length), traj, sub);
}

}  // namespace coordplan
