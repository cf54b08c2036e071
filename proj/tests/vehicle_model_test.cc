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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "coordplan/error.h"

namespace coordplan {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(StepDynamicsTest, Examples) {
  const VehicleParams p;
  const VehicleState a = StepDynamics({0, 0, 0, 1, 0}, {1, 0}, p, 0.1);
  EXPECT_DOUBLE_EQ(a.x, 0.1);
  EXPECT_EQ(a.y, 0.0);
  EXPECT_EQ(a.psi, 0.0);
  EXPECT_DOUBLE_EQ(a.v, 1.1);
  EXPECT_EQ(a.delta, 0.0);

  const VehicleState b = StepDynamics({0, 0, kPi / 2, 2, 0}, {0, 0}, p, 0.1);
  EXPECT_NEAR(b.x, 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(b.y, 0.2);
  EXPECT_EQ(b.psi, kPi / 2);
  EXPECT_EQ(b.v, 2.0);
}

TEST(StepDynamicsTest, ZeroSteeringKeepsHeading) {
  const VehicleParams p;
  VehicleState s{1, 2, 0.7, 3, 0};
  for (int k = 0; k < 100; ++k) s = StepDynamics(s, {0.1, 0}, p, 0.1);
  EXPECT_EQ(s.psi, 0.7);
  EXPECT_NEAR((s.y - 2) / (s.x - 1), std::tan(0.7), 1e-12);
}

TEST(StepDynamicsTest, EulerUpdateUsesPreviousState) {
  const VehicleParams p;
  const VehicleState s{0, 0, 0.3, 2, 0.1};
  const VehicleState n = StepDynamics(s, {0.5, 0.2}, p, 0.1);
  EXPECT_EQ(n.x, 0.0 + 2 * std::cos(0.3) * 0.1);
  EXPECT_EQ(n.y, 0.0 + 2 * std::sin(0.3) * 0.1);
  EXPECT_EQ(n.psi, 0.3 + 2 / 2.5 * std::tan(0.1) * 0.1);
  EXPECT_EQ(n.v, 2 + 0.5 * 0.1);
  EXPECT_EQ(n.delta, 0.1 + 0.2 * 0.1);
}

TEST(StepDynamicsTest, ClampsInputsAndSteering) {
  const VehicleParams p;
  const VehicleState n = StepDynamics({0, 0, 0, 1, 0}, {10, 5}, p, 0.1);
  EXPECT_DOUBLE_EQ(n.v, 1.3);
  EXPECT_DOUBLE_EQ(n.delta, 0.04);
  const VehicleState edge =
      StepDynamics({0, 0, 0, 1, p.delta_max - 0.01}, {0, 0.4}, p, 0.1);
  EXPECT_EQ(edge.delta, p.delta_max);
}

TEST(ClampInputTest, Box) {
  const VehicleParams p;
  const ControlInput c = ClampInput({-9, -9}, p);
  EXPECT_EQ(c.a, -4.0);
  EXPECT_EQ(c.delta_rate, -0.4);
}

TEST(VehicleParamsTest, Validate) {
  VehicleParams p;
  EXPECT_NO_THROW(p.Validate());
  p.a_min = 5;
  EXPECT_THROW(p.Validate(), Error);
}

TEST(WrapAngleTest, HalfOpenRange) {
  EXPECT_DOUBLE_EQ(WrapAngle(kPi), kPi);
  EXPECT_DOUBLE_EQ(WrapAngle(-kPi), kPi);
  EXPECT_NEAR(WrapAngle(3 * kPi / 2), -kPi / 2, 1e-12);
  EXPECT_NEAR(WrapAngle(0.25), 0.25, 1e-15);
}

TEST(LateralAccelerationTest, Formula) {
  const VehicleParams p;
  EXPECT_DOUBLE_EQ(LateralAcceleration({0, 0, 0, 3, 0.2}, p),
                   9 * std::tan(0.2) / 2.5);
}

}  // namespace
}  // namespace coordplan
