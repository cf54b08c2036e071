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

// Velocity profiles and time schedules derived from a planned trajectory.

#ifndef COORDPLAN_PROFILE_H_
#define COORDPLAN_PROFILE_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "coordplan/trajectory.h"

namespace coordplan {

// Piecewise-constant unit direction of a trajectory, one entry per segment.
struct VelocityProfile {
  std::vector<int> axes;
  std::vector<std::vector<double>> directions;  // unit vectors, >= 0
  std::vector<double> lengths;                  // segment arc lengths
  std::vector<std::vector<double>> waypoints;   // segment endpoints
};

VelocityProfile UnitVelocityProfile(const Trajectory& traj);

// Time-stamped arc-length schedule for every vehicle of a trajectory. Within
// each segment the fastest vehicle moves at v_max and the others at their
// proportional speeds.
struct Schedule {
  std::vector<int> axes;
  std::vector<double> times;                   // one per waypoint
  std::vector<std::vector<double>> positions;  // [waypoint][axis]
  std::vector<std::vector<double>> speeds;     // [segment][axis]

  double makespan() const { return times.back(); }
  // Arc length of `axis` at time t, clamped to the schedule's ends.
  double PositionAt(std::size_t axis, double t) const;
  // Speed of `axis` on the segment containing t (right-continuous); 0 outside
  // [0, makespan).
  double SpeedAt(std::size_t axis, double t) const;
  std::optional<std::size_t> AxisOf(int vehicle) const;
};

// Throws Error(kInvalidArgument) if v_max <= 0 and Error(kZeroSegment) if a
// segment has no positive component.
Schedule ReferenceSchedule(const VelocityProfile& profile, double v_max);

}  // namespace coordplan

#endif  // COORDPLAN_PROFILE_H_
