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

// Closed-loop simulation: every vehicle runs its own controller against its
// own schedule; vehicles never exchange information at this level.

#ifndef COORDPLAN_SIMULATION_H_
#define COORDPLAN_SIMULATION_H_

#include <cstddef>
#include <string_view>
#include <vector>

#include "coordplan/conflict.h"
#include "coordplan/geometry.h"
#include "coordplan/nmpc.h"
#include "coordplan/profile.h"
#include "coordplan/vehicle_model.h"

namespace coordplan {

enum class InitialSpeed { kRest, kReference };

std::string_view InitialSpeedName(InitialSpeed s);
InitialSpeed ParseInitialSpeed(std::string_view name);

struct SimConfig {
  NmpcConfig nmpc;
  VehicleParams params;
  // Vehicles start at rest or at their scheduled speed.
  InitialSpeed initial_speed = InitialSpeed::kReference;
  // Occupancy is judged against radius * scale. The default keeps a 1/1.33
  // margin for tracking error inside each conflict disc.
  double occupancy_radius_scale = 0.75;
  // A vehicle is done once its schedule has ended and it is within
  // goal_tolerance of its path end at no more than stop_speed.
  double goal_tolerance = 0.5;
  double stop_speed = 0.1;
  // Extra simulated time allowed past the makespan.
  double settle_time = 15.0;

  friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

struct SimRecord {
  double t = 0.0;
  VehicleState state;
  ControlInput input;  // applied over [t, t + dt)
  double s_ref = 0.0;
  double v_ref = 0.0;
  double x_ref = 0.0;
  double y_ref = 0.0;
  bool converged = true;
};

struct OccupancyEvent {
  std::size_t step = 0;
  double t = 0.0;
  std::size_t rect = 0;  // index into ConflictSet::rects()
  int i = 0;
  int j = 0;
};

struct PairDistance {
  int i = 0;
  int j = 0;
  double min_distance = 0.0;
  double t = 0.0;
};

struct SimLog {
  double dt = 0.0;
  std::size_t steps = 0;
  bool completed = false;  // every vehicle reached its goal before the cap
  std::vector<std::vector<SimRecord>> records;  // [vehicle][step]
  // Steps at which both vehicles of a conflict were inside the scaled disc.
  std::vector<OccupancyEvent> violations;
  // Same test against the unscaled radius, reported for reference.
  std::size_t full_radius_overlaps = 0;
  std::vector<PairDistance> pair_distances;
  std::vector<double> max_position_error;  // per vehicle
  std::vector<double> max_speed_error;     // per vehicle
  std::size_t unconverged_solves = 0;
  std::size_t stalled_solves = 0;
};

// vehicle_paths[v] is the path of vehicle v; the schedule must carry an axis
// for every vehicle. Throws Error(kInvalidArgument) otherwise.
SimLog Simulate(const std::vector<PolylinePath>& vehicle_paths,
                const Schedule& schedule, const ConflictSet& conflicts,
                const SimConfig& config);

}  // namespace coordplan

#endif  // COORDPLAN_SIMULATION_H_
