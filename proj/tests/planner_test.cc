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

#include "coordplan/planner.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "coordplan/error.h"
#include "coordplan/feasibility.h"
#include "support/test_support.h"

namespace coordplan {
namespace {

PlanningProblem Unconstrained(std::vector<double> lengths) {
  return {std::move(lengths), ConflictSet()};
}

void ExpectStraight(const PlanResult& plan, const PlanningProblem& problem) {
  EXPECT_NEAR(plan.length(), problem.LowerBound(), 1e-9);
  ASSERT_EQ(plan.trajectory.waypoints().size(), 2u);
  for (int v = 0; v < problem.num_vehicles(); ++v) {
    EXPECT_EQ(plan.trajectory.waypoints().back()[v], problem.path_lengths[v]);
  }
}

TEST(PlannerTest, EmptyConflictSetGivesStraightLine) {
  const PlanningProblem p3 = Unconstrained({30, 40, 50});
  ExpectStraight(IncrementalPlan(p3, {2, 0, 1}), p3);
  ExpectStraight(PairwisePlan(p3, {1, 2, 0}), p3);
  const PlanningProblem p4 = Unconstrained({10, 20, 30, 40});
  ExpectStraight(PairwisePlan(p4, {3, 1, 0, 2}), p4);
}

TEST(PlannerTest, TwoVehiclesMatchSingleSolve) {
  const auto f = testing::PerpendicularCrossing(10);
  const PlanResult inc = IncrementalPlan(f.problem, {0, 1});
  const PlanResult pw = PairwisePlan(f.problem, {0, 1});
  EXPECT_EQ(inc.trajectory, pw.trajectory);
  ASSERT_EQ(inc.subproblems.size(), 1u);
  EXPECT_EQ(inc.subproblems[0].num_rects, 1u);
  // Rect [20,40]^2 in the 60 x 60 plane: corner (40, 20).
  EXPECT_NEAR(inc.length(), std::hypot(40, 20) + std::hypot(20, 40), 1e-9);
  EXPECT_EQ(inc.trajectory.axes(), (std::vector<int>{0, 1}));
}

TEST(PlannerTest, DoubleCrossingIsFeasibleAndAboveBound) {
  const auto f = testing::ThreeVehicleDoubleCrossing();
  for (const Order& o : EnumerateIncrementalOrders(3)) {
    for (Strategy s : {Strategy::kIncremental, Strategy::kPairwise}) {
      const PlanResult plan = PlanOrder(f.problem, s, o);
      EXPECT_GE(plan.length(), f.problem.LowerBound() - 1e-9);
      EXPECT_TRUE(ValidateFeasibility(plan.trajectory, f.conflicts,
                                      f.problem.path_lengths)
                      .ok());
    }
  }
}

TEST(PlannerTest, OrdersInOneTreeClassGiveTheSameLength) {
  std::mt19937_64 rng(3);
  testing::RandomScenarioOptions opt;
  opt.min_vehicles = opt.max_vehicles = 4;
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = testing::RandomScenario(rng, opt);
    Order order(4);
    std::iota(order.begin(), order.end(), 0);
    do {
      const double a = PairwisePlan(f.problem, order).length();
      const double b =
          PairwisePlan(f.problem, CanonicalPairwiseOrder(order)).length();
      EXPECT_NEAR(a, b, 1e-9);
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

TEST(PlannerTest, RejectsBadOrders) {
  const auto f = testing::PerpendicularCrossing();
  EXPECT_THROW(IncrementalPlan(f.problem, {0}), Error);
  EXPECT_THROW(IncrementalPlan(f.problem, {0, 0}), Error);
  EXPECT_THROW(PairwisePlan(f.problem, {0, 2}), Error);
}

TEST(PlannerTest, DeterministicWaypoints) {
  const auto f = testing::ThreeVehicleDoubleCrossing();
  EXPECT_EQ(IncrementalPlan(f.problem, {1, 2, 0}).trajectory,
            IncrementalPlan(f.problem, {1, 2, 0}).trajectory);
}

TEST(FindBestPlanTest, EmptyConflictSetNeedsOneEvaluation) {
  const PlanningProblem p = Unconstrained({3, 4, 12});
  for (const Budget& b : {Budget::All(), Budget::Count(5), Budget::Time(0.5)}) {
    const BestPlan best = FindBestPlan(p, Strategy::kIncremental, b, 1);
    EXPECT_EQ(best.stats.evaluated(), 1u);
    EXPECT_NEAR(best.plan.length(), 13.0, 1e-12);
  }
}

TEST(FindBestPlanTest, ExhaustiveThreeVehicles) {
  const auto f = testing::ThreeVehicleDoubleCrossing();
  const BestPlan best =
      FindBestPlan(f.problem, Strategy::kIncremental, Budget::All(), 0);
  ASSERT_EQ(best.stats.evaluated(), 3u);
  double min_len = 1e300;
  for (const OrderOutcome& o : best.stats.outcomes) {
    ASSERT_TRUE(o.length);
    min_len = std::min(min_len, *o.length);
  }
  EXPECT_EQ(best.plan.length(), min_len);
}

TEST(FindBestPlanTest, ThreadCountDoesNotChangeResult) {
  std::mt19937_64 rng(21);
  testing::RandomScenarioOptions opt;
  opt.min_vehicles = opt.max_vehicles = 5;
  const auto f = testing::RandomScenario(rng, opt);
  for (Strategy s : {Strategy::kIncremental, Strategy::kPairwise}) {
    const BestPlan one = FindBestPlan(f.problem, s, Budget::All(), 0, 1);
    const BestPlan four = FindBestPlan(f.problem, s, Budget::All(), 0, 4);
    EXPECT_EQ(one.plan.order, four.plan.order);
    EXPECT_EQ(one.plan.trajectory, four.plan.trajectory);
  }
}

TEST(FindBestPlanTest, CountBudgetIsReproducible) {
  std::mt19937_64 rng(8);
  testing::RandomScenarioOptions opt;
  opt.min_vehicles = opt.max_vehicles = 6;
  const auto f = testing::RandomScenario(rng, opt);
  const BestPlan a = FindBestPlan(f.problem, Strategy::kIncremental,
                                  Budget::Count(1), 99);
  const BestPlan b = FindBestPlan(f.problem, Strategy::kIncremental,
                                  Budget::Count(1), 99);
  EXPECT_EQ(a.stats.evaluated(), 1u);
  EXPECT_EQ(a.plan.order, b.plan.order);
  EXPECT_EQ(a.plan.trajectory, b.plan.trajectory);
  const BestPlan c = FindBestPlan(f.problem, Strategy::kIncremental,
                                  Budget::Count(100000), 99);
  EXPECT_EQ(c.stats.evaluated(), 360u);  // capped at the canonical count
}

TEST(FindBestPlanTest, TimeBudgetBestIsMinimum) {
  std::mt19937_64 rng(4);
  testing::RandomScenarioOptions opt;
  opt.min_vehicles = opt.max_vehicles = 6;
  const auto f = testing::RandomScenario(rng, opt);
  const BestPlan best =
      FindBestPlan(f.problem, Strategy::kPairwise, Budget::Time(0.2), 5);
  EXPECT_GE(best.stats.evaluated(), 1u);
  for (const OrderOutcome& o : best.stats.outcomes) {
    if (o.length) {
      EXPECT_LE(best.plan.length(), *o.length + 1e-9);
    }
  }
}

TEST(BudgetTest, ParseAndFormat) {
  EXPECT_EQ(Budget::Parse("all"), Budget::All());
  EXPECT_EQ(Budget::Parse("count:12"), Budget::Count(12));
  EXPECT_EQ(Budget::Parse("time:2.5"), Budget::Time(2.5));
  EXPECT_EQ(Budget::Time(0.1).ToString(), "time:0.1");
  EXPECT_EQ(Budget::Count(3).ToString(), "count:3");
  for (const char* bad : {"", "count:0", "count:-1", "time:0", "time:x",
                          "count:5x", "some"}) {
    EXPECT_THROW(Budget::Parse(bad), Error) << bad;
  }
}

TEST(CanonicalOrderCountTest, Values) {
  EXPECT_EQ(CanonicalOrderCount(Strategy::kIncremental, 4), 12u);
  EXPECT_EQ(CanonicalOrderCount(Strategy::kPairwise, 5), 15u);
  EXPECT_EQ(CanonicalOrderCount(Strategy::kPairwise, 6), 45u);
}

}  // namespace
}  // namespace coordplan
