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

#ifndef COORDPLAN_TRAJECTORY_H_
#define COORDPLAN_TRAJECTORY_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "coordplan/conflict.h"
#include "coordplan/search2d.h"

namespace coordplan {

// A componentwise-monotone piecewise-linear curve through the joint
// configuration space of a subset of vehicles, parameterized by its own arc
// length ell in [0, length()]. Coordinate `a` of every waypoint is the arc
// length of vehicle axes()[a] along its path.
class Trajectory {
 public:
  // Consecutive duplicate waypoints are merged. Throws Error(kInvalidArgument)
  // on dimension mismatch, duplicate axes or fewer than one waypoint.
  Trajectory(std::vector<int> axes, std::vector<std::vector<double>> waypoints);

  // The one-dimensional trajectory of a single vehicle: 0 -> path_length.
  static Trajectory ForVehicle(int vehicle, double path_length);

  std::size_t dim() const { return axes_.size(); }
  const std::vector<int>& axes() const { return axes_; }
  const std::vector<std::vector<double>>& waypoints() const {
    return waypoints_;
  }
  std::size_t num_segments() const { return waypoints_.size() - 1; }
  // Arc length at each waypoint; front() == 0, back() == length().
  const std::vector<double>& breakpoints() const { return cum_; }
  double length() const { return cum_.back(); }

  std::optional<std::size_t> AxisOf(int vehicle) const;

  // Point at arc length ell (clamped to [0, length()]); exact at waypoints.
  std::vector<double> At(double ell) const;
  double ComponentAt(std::size_t axis, double ell) const;

  // Same curve with axes permuted into ascending vehicle order.
  Trajectory Canonical() const;

  friend bool operator==(const Trajectory&, const Trajectory&) = default;

 private:
  std::vector<int> axes_;
  std::vector<std::vector<double>> waypoints_;
  std::vector<double> cum_;
};

double TrajectoryLength(const Trajectory& traj);

// {ell : component(ell) in [lo, hi]} -- one closed interval because every
// component is nondecreasing. Empty if the component never reaches [lo, hi].
std::optional<Interval> ProjectInterval(const Trajectory& traj,
                                        std::size_t axis, Interval range);

// Closure of {ell : component(ell) in (lo, hi)}: the ell-range over which the
// vehicle is strictly inside the interval. Empty if it never is. This is the
// tight obstacle extent used for projecting conflicts.
std::optional<Interval> OccupancyInterval(const Trajectory& traj,
                                          std::size_t axis, Interval range);

// Rectangles in the (ell_left, ell_right) plane for every conflict between a
// vehicle of `left` and a vehicle of `right`. Conflicts whose two vehicles
// lie on the same side are already resolved and skipped.
std::vector<Rect> ProjectConflicts(const Trajectory& left,
                                   const Trajectory& right,
                                   const ConflictSet& conflicts);

// Combines two trajectories over disjoint vehicle sets through a monotone
// polyline `sub` in their (ell_x, ell_y) plane. Breakpoints of either side are
// inserted so the result is exactly piecewise linear. Axes of the result are
// x_side.axes() followed by y_side.axes(). Throws Error(kSpanMismatch) if sub
// does not run from (0, 0) to (x_side.length(), y_side.length()).
Trajectory Lift(const Trajectory& x_side, const Trajectory& y_side,
                const Polyline2& sub);

// Incremental form: the new vehicle is the x axis of `sub`, `traj` the y axis.
Trajectory LiftVehicle(const Trajectory& traj, const Polyline2& sub,
                       int new_vehicle, double new_path_length);

}  // namespace coordplan

#endif  // COORDPLAN_TRAJECTORY_H_
