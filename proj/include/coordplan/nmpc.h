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

// Receding-horizon tracking controller for one vehicle.
//
// The optimizer is single shooting over the input sequence: the cost is a sum
// of squared residuals, minimized by projected Gauss-Newton with an active
// set for the input box and an Armijo search along the projection arc. The
// steering-angle and lateral-acceleration limits are state constraints and
// enter as stiff quadratic penalties; the first steering rate is bounded so
// the next steering angle is always admissible.

#ifndef COORDPLAN_NMPC_H_
#define COORDPLAN_NMPC_H_

#include <cstddef>
#include <vector>

#include "coordplan/geometry.h"
#include "coordplan/profile.h"
#include "coordplan/vehicle_model.h"

namespace coordplan {

struct NmpcConfig {
  int horizon = 20;
  double dt = 0.1;
  double v_max = 3.0;
  // Stage weights.
  double w_position = 50.0;
  double w_velocity = 10.0;
  double w_heading = 10.0;
  // Input effort, applied to both inputs.
  double w_effort = 0.5;
  // Input-rate weights. The steering entry of the smoothness matrix is
  // w_smoothness + w_steering_smoothness.
  double w_smoothness = 10.0;
  double w_steering_smoothness = 1.0;
  // Terminal weights.
  double w_terminal_position = 200.0;
  double w_terminal_velocity = 30.0;
  double w_terminal_heading = 30.0;
  // Solver.
  int max_iterations = 100;
  double stationarity_tolerance = 1e-6;
  double penalty = 1e4;

  // Throws Error(kInvalidArgument) on negative weights, horizon < 1 or
  // nonpositive dt / v_max.
  void Validate() const;

  friend bool operator==(const NmpcConfig&, const NmpcConfig&) = default;
};

struct ReferenceState {
  double x = 0.0;
  double y = 0.0;
  double psi = 0.0;
  double v = 0.0;
  double s = 0.0;  // arc length along the path
};

// References at t, t + dt, ..., t + horizon dt for the vehicle on schedule
// axis `axis`. Positions come from the path at the scheduled arc length,
// headings from the path tangent and speeds from the schedule slope.
std::vector<ReferenceState> ReferenceForHorizon(const PolylinePath& path,
                                                const Schedule& schedule,
                                                std::size_t axis, double t,
                                                const NmpcConfig& config);

struct NmpcSolution {
  std::vector<ControlInput> inputs;      // horizon entries, inside the box
  std::vector<VehicleState> predicted;   // horizon + 1 states
  double cost = 0.0;
  double stationarity = 0.0;  // inf-norm of the projected gradient step
  int iterations = 0;
  bool converged = false;  // stationarity tolerance reached
  bool stalled = false;    // line search failed; best iterate returned
};

// `warm_start` is the previous solution (shifted by one step here, last entry
// repeated) or empty. `last_input` is the input applied on the previous step
// and anchors the first smoothness term.
NmpcSolution NmpcSolve(const VehicleState& state,
                       const std::vector<ReferenceState>& refs,
                       const VehicleParams& params, const NmpcConfig& config,
                       const std::vector<ControlInput>& warm_start,
                       const ControlInput& last_input = {});

}  // namespace coordplan

#endif  // COORDPLAN_NMPC_H_
