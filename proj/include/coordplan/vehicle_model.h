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

// Kinematic bicycle model, forward-Euler discretized. (x, y) is the rear-axle
// position.

#ifndef COORDPLAN_VEHICLE_MODEL_H_
#define COORDPLAN_VEHICLE_MODEL_H_

#include <numbers>

namespace coordplan {

struct VehicleState {
  double x = 0.0;
  double y = 0.0;
  double psi = 0.0;    // heading, rad
  double v = 0.0;      // m/s
  double delta = 0.0;  // steering angle, rad

  friend bool operator==(const VehicleState&, const VehicleState&) = default;
};

struct ControlInput {
  double a = 0.0;          // m/s^2
  double delta_rate = 0.0; // rad/s

  friend bool operator==(const ControlInput&, const ControlInput&) = default;
};

struct VehicleParams {
  double wheelbase = 2.5;
  double a_min = -4.0;
  double a_max = 3.0;
  double delta_rate_min = -0.4;
  double delta_rate_max = 0.4;
  double delta_min = -40.0 * std::numbers::pi / 180.0;
  double delta_max = 40.0 * std::numbers::pi / 180.0;
  // Bounds on v^2 tan(delta) / L.
  double lat_acc_min = -4.0;
  double lat_acc_max = 4.0;

  // Throws Error(kInvalidArgument) unless every lower bound is below its
  // upper bound and the wheelbase is positive.
  void Validate() const;

  friend bool operator==(const VehicleParams&, const VehicleParams&) = default;
};

ControlInput ClampInput(const ControlInput& u, const VehicleParams& params);

// One Euler step. Inputs outside the box are clamped first; the steering
// angle is clamped to its bounds after the update.
VehicleState StepDynamics(const VehicleState& s, const ControlInput& u,
                          const VehicleParams& params, double dt);

double LateralAcceleration(const VehicleState& s, const VehicleParams& params);

// Wraps an angle to (-pi, pi].
double WrapAngle(double a);

}  // namespace coordplan

#endif  // COORDPLAN_VEHICLE_MODEL_H_
