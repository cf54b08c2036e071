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

// Decomposition planners. Both reduce the N-vehicle problem to N - 1 planar
// shortest-path problems:
//
//  * incremental: solve one vehicle pair, then repeatedly coordinate one more
//    vehicle against the arc length of the joint trajectory built so far;
//  * pairwise: coordinate disjoint pairs, then pairs of joint trajectories,
//    pass by pass, following CoordinationTree.
//
// Every planar solution is lifted back so that the result is a monotone
// piecewise-linear trajectory through the full configuration space.

#ifndef COORDPLAN_PLANNER_H_
#define COORDPLAN_PLANNER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coordplan/conflict.h"
#include "coordplan/orders.h"
#include "coordplan/trajectory.h"

namespace coordplan {

struct PlanningProblem {
  std::vector<double> path_lengths;  // indexed by vehicle
  ConflictSet conflicts;

  int num_vehicles() const { return static_cast<int>(path_lengths.size()); }
  // Euclidean norm of the goal vector: the straight-line lower bound.
  double LowerBound() const;
};

enum class Strategy { kIncremental, kPairwise };

std::string_view StrategyName(Strategy s);
Strategy ParseStrategy(std::string_view name);

struct SubproblemStats {
  std::size_t num_rects = 0;
  std::size_t num_nodes = 0;
};

struct PlanResult {
  Trajectory trajectory;  // axes in ascending vehicle order
  Order order;
  std::vector<SubproblemStats> subproblems;

  double length() const { return trajectory.length(); }
};

// Throws Error(kInvalidArgument) if `order` is not a permutation of the
// vehicles; Error(kNoPath) propagates from the planar search.
PlanResult IncrementalPlan(const PlanningProblem& problem, const Order& order);
PlanResult PairwisePlan(const PlanningProblem& problem, const Order& order);
PlanResult PlanOrder(const PlanningProblem& problem, Strategy strategy,
                     const Order& order);

struct Budget {
  enum class Kind { kAll, kCount, kTime };
  Kind kind = Kind::kAll;
  std::uint64_t count = 0;
  double seconds = 0.0;

  static Budget All() { return {}; }
  static Budget Count(std::uint64_t n) { return {Kind::kCount, n, 0.0}; }
  static Budget Time(double s) { return {Kind::kTime, 0, s}; }

  // "all", "count:N" or "time:S".
  static Budget Parse(std::string_view text);
  std::string ToString() const;

  friend bool operator==(const Budget&, const Budget&) = default;
};

struct OrderOutcome {
  Order order;
  std::optional<double> length;  // empty if the order failed with NoPath
};

struct SweepStats {
  std::vector<OrderOutcome> outcomes;  // in evaluation order
  double wall_seconds = 0.0;
  std::size_t evaluated() const { return outcomes.size(); }
};

struct BestPlan {
  PlanResult plan;
  SweepStats stats;
};

// Evaluates canonical orders according to `budget` -- all of them, or
// distinct random ones drawn with `seed` -- and keeps the shortest
// trajectory; ties go to the lexicographically smallest order. `threads` <= 0
// reads COORDPLAN_THREADS (default: hardware concurrency). Throws
// Error(kNoFeasibleOrder) if every evaluated order failed.
BestPlan FindBestPlan(const PlanningProblem& problem, Strategy strategy,
                      const Budget& budget, std::uint64_t seed,
                      int threads = 0);

// Number of distinct canonical orders for n vehicles (saturates at 2^64 - 1).
std::uint64_t CanonicalOrderCount(Strategy strategy, int n);

}  // namespace coordplan

#endif  // COORDPLAN_PLANNER_H_
