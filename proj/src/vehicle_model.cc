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

#include "coordplan/vehicle_model.h"

#include <algorithm>
#include <cmath>

#include "coordplan/error.h"

namespace coordplan {

void VehicleParams::Validate() const {
  if (!(wheelbase > 0.0) || !(a_min < a_max) ||
      !(delta_rate_min < delta_rate_max) || !(delta_min < delta_max) ||
      !(lat_acc_min < lat_acc_max)) {
    throw Error(ErrorCode::kInvalidArgument,
                "vehicle bounds need lower < upper and a positive wheelbase");
  }
}

ControlInput ClampInput(const ControlInput& u, const VehicleParams& params) {
  return {std::clamp(u.a, params.a_min, params.a_max),
          std::clamp(u.delta_rate, params.delta_rate_min,
                     params.delta_rate_max)};
}

VehicleState StepDynamics(const VehicleState& s, const ControlInput& u,
                          const VehicleParams& params, double dt) {
  const ControlInput c = ClampInput(u, params);
  VehicleState n;
  n.x = s.x + s.v * std::cos(s.psi) * dt;
  n.y = s.y + s.v * std::sin(s.psi) * dt;
  n.psi = s.psi + s.v / params.wheelbase * std::tan(s.delta) * dt;
  n.v = s.v + c.a * dt;
  n.delta = std::clamp(s.delta + c.delta_rate * dt, params.delta_min,
                       params.delta_max);
  return n;
}

double LateralAcceleration(const VehicleState& s, const VehicleParams& params) {
  return s.v * s.v * std::tan(s.delta) / params.wheelbase;
}

double WrapAngle(double a) {
  constexpr double kTwoPi = 2.0 * 3.14159265358979323846;
  double r = std::remainder(a, kTwoPi);
  if (r <= -kTwoPi / 2) r += kTwoPi;
  return r;
}

}  // namespace coordplan
