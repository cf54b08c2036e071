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

#include "coordplan/oracle.h"

#include <cmath>

#include <gtest/gtest.h>

#include "coordplan/error.h"
#include "coordplan/feasibility.h"
#include "coordplan/search2d.h"
#include "support/test_support.h"

namespace coordplan {
namespace {

ConflictSet SingleRect(double lo, double hi) {
  ConflictRect c;
  c.i = 0;
  c.j = 1;
  c.lo_i = c.lo_j = lo;
  c.hi_i = c.hi_j = hi;
  return ConflictSet({c}, {});
}

TEST(GridPlanTest, SingleRectAgreesWithCornerPath) {
  const double exact = 2 * std::sqrt(52.0);
  for (int k : {8, 16}) {
    const GridResult g = GridPlan({10, 10}, SingleRect(4, 6), {0.05, k});
    EXPECT_GE(g.length, exact - 1e-9) << k;
    EXPECT_NEAR(g.length, 14.42, 0.03) << k;
  }
}

TEST(GridPlanTest, EmptySetWithinOneCellDiagonal) {
  const GridResult g = GridPlan({10, 10}, ConflictSet(), {0.1, 1});
  EXPECT_NEAR(g.length, std::sqrt(200.0), 0.1 * std::sqrt(2.0));
  // Off-diagonal directions need steps long enough to represent them.
  const GridResult g3 = GridPlan({3, 4, 5}, ConflictSet(), {0.1, 5});
  EXPECT_NEAR(g3.length, std::sqrt(50.0), 0.1 * std::sqrt(3.0));
  const GridResult unit = GridPlan({3, 4, 5}, ConflictSet(), {0.1, 1});
  EXPECT_GT(unit.length, std::sqrt(50.0) + 0.1 * std::sqrt(3.0));
}

TEST(GridPlanTest, LatticeTrajectoryIsFeasible) {
  const ConflictSet set = SingleRect(4, 6);
  const GridResult g = GridPlan({10, 10}, set, {0.1, 3});
  EXPECT_TRUE(ValidateFeasibility(g.trajectory, set, {10, 10}).ok());
  EXPECT_EQ(g.lattice_points, 101u * 101u);
}

TEST(GridPlanTest, RefinementNeverIncreasesLength) {
  const ConflictSet set = SingleRect(4, 6);
  for (int k : {1, 8}) {
    const double coarse = GridPlan({10, 10}, set, {0.1, k}).length;
    const double fine = GridPlan({10, 10}, set, {0.05, k}).length;
    EXPECT_LE(fine, coarse + 1e-9);
  }
}

TEST(GridPlanTest, Guards) {
  try {
    GridPlan({1, 1, 1, 1}, ConflictSet(), {});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
  try {
    GridPlan({1000, 1000, 1000}, ConflictSet(), {0.1, 1});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
  try {
    GridPlan({10, 10}, SingleRect(-1, 2), {0.1, 1});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoPath);
  }
}

TEST(GridPlanTest, MatchesSearch2DOnRandomRects) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const auto rects = testing::RandomRects(rng, 3, 10.0, 0.5, 3.0);
    std::vector<ConflictRect> cr;
    for (const Rect& r : rects) {
      ConflictRect c;
      c.i = 0;
      c.j = 1;
      c.lo_i = r.x_lo;
      c.hi_i = r.x_hi;
      c.lo_j = r.y_lo;
      c.hi_j = r.y_hi;
      cr.push_back(c);
    }
    const double exact = Search2D({0, 0}, {10, 10}, rects).length;
    const double grid =
        GridPlan({10, 10}, ConflictSet(cr, {}), {0.05, 16}).length;
    EXPECT_GE(grid, exact - 1e-9);
    EXPECT_LE(grid, exact + 0.05 * std::sqrt(2.0));
  }
}

TEST(GapTest, Examples) {
  EXPECT_EQ(Gap(5.0, 5.0), 1.0);
  EXPECT_NEAR(Gap(14.4222, 14.45), 0.998, 1e-3);
  EXPECT_NEAR(Gap(316, 300), 1.053, 1e-3);
  EXPECT_THROW(Gap(1.0, 0.0), Error);
}

}  // namespace
}  // namespace coordplan
