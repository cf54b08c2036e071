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

#include "coordplan/simulation.h"

#include <cmath>

#include <gtest/gtest.h>

#include "coordplan/planner.h"
#include "support/test_support.h"

namespace coordplan {
namespace {

void ExpectInputsInBounds(const SimLog& log, const VehicleParams& p) {
  for (const auto& series : log.records) {
    for (const SimRecord& r : series) {
      EXPECT_GE(r.input.a, p.a_min);
      EXPECT_LE(r.input.a, p.a_max);
      EXPECT_GE(r.input.delta_rate, p.delta_rate_min);
      EXPECT_LE(r.input.delta_rate, p.delta_rate_max);
      EXPECT_GE(r.state.delta, p.delta_min);
      EXPECT_LE(r.state.delta, p.delta_max);
    }
  }
}

TEST(SimulateTest, SingleStraightVehicleFromRest) {
  const std::vector<PolylinePath> paths = {
      PolylinePath::Build({{0, 0}, {30, 0}})};
  const Schedule s = ReferenceSchedule(
      UnitVelocityProfile(Trajectory::ForVehicle(0, 30)), 3.0);
  SimConfig config;
  config.initial_speed = InitialSpeed::kRest;
  const SimLog log = Simulate(paths, s, ConflictSet(), config);
  ASSERT_TRUE(log.completed);
  const double finish = log.steps * log.dt;
  EXPECT_GE(finish, 10.0);
  EXPECT_LE(finish, 12.0);
  ExpectInputsInBounds(log, config.params);
  EXPECT_LE(std::hypot(log.records[0].back().state.x - 30,
                       log.records[0].back().state.y),
            config.goal_tolerance + 0.5);
}

TEST(SimulateTest, VehicleAlreadyAtGoal) {
  const std::vector<PolylinePath> paths = {
      PolylinePath::Build({{0, 0}, {30, 0}})};
  const Schedule s =
      ReferenceSchedule(UnitVelocityProfile(Trajectory({0}, {{30}})), 3.0);
  EXPECT_EQ(s.makespan(), 0.0);
  const SimLog log = Simulate(paths, s, ConflictSet(), SimConfig());
  EXPECT_TRUE(log.completed);
  for (const SimRecord& r : log.records[0]) {
    EXPECT_EQ(r.input, ControlInput());
    EXPECT_EQ(r.state.x, 30.0);
    EXPECT_EQ(r.state.v, 0.0);
  }
}

TEST(SimulateTest, CrossingHasNoSimultaneousOccupancy) {
  const auto f = testing::PerpendicularCrossing(10);
  const PlanResult plan = IncrementalPlan(f.problem, {0, 1});
  const Schedule s = ReferenceSchedule(UnitVelocityProfile(plan.trajectory), 3);
  const SimConfig config;
  const SimLog log = Simulate(f.paths, s, f.conflicts, config);
  EXPECT_TRUE(log.completed);
  EXPECT_TRUE(log.violations.empty());
  ExpectInputsInBounds(log, config.params);
  ASSERT_EQ(log.pair_distances.size(), 1u);
  EXPECT_GT(log.pair_distances[0].min_distance, 5.0);
}

TEST(SimulateTest, ReplayReproducesStates) {
  const auto f = testing::PerpendicularCrossing(10);
  const PlanResult plan = IncrementalPlan(f.problem, {0, 1});
  const Schedule s = ReferenceSchedule(UnitVelocityProfile(plan.trajectory), 3);
  const SimConfig config;
  const SimLog log = Simulate(f.paths, s, f.conflicts, config);
  for (const auto& series : log.records) {
    for (std::size_t k = 1; k < series.size(); ++k) {
      EXPECT_EQ(StepDynamics(series[k - 1].state, series[k - 1].input,
                             config.params, log.dt),
                series[k].state);
    }
  }
}

TEST(SimulateTest, PermutingVehiclesPermutesTheLog) {
  const auto f = testing::PerpendicularCrossing(10);
  const PlanResult plan = IncrementalPlan(f.problem, {0, 1});
  const Schedule s = ReferenceSchedule(UnitVelocityProfile(plan.trajectory), 3);
  const SimLog log = Simulate(f.paths, s, f.conflicts, SimConfig());

  // Swap vehicle indices in the paths, the schedule axes and the conflicts.
  const std::vector<PolylinePath> swapped = {f.paths[1], f.paths[0]};
  Schedule t = s;
  t.axes = {1, 0};
  std::vector<ConflictRect> rects = f.conflicts.rects();
  for (ConflictRect& r : rects) {
    std::swap(r.lo_i, r.lo_j);
    std::swap(r.hi_i, r.hi_j);
  }
  const SimLog other =
      Simulate(swapped, t, ConflictSet(rects, {}), SimConfig());
  ASSERT_EQ(other.steps, log.steps);
  for (std::size_t k = 0; k < log.records[0].size(); ++k) {
    EXPECT_EQ(other.records[1][k].state, log.records[0][k].state);
    EXPECT_EQ(other.records[0][k].input, log.records[1][k].input);
  }
}

}  // namespace
}  // namespace coordplan
