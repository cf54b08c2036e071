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
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <set>
#include <thread>

#include "coordplan/error.h"
#include "coordplan/search2d.h"

namespace coordplan {
namespace {

// Lengths within this distance of the best are ties.
constexpr double kLengthTieTolerance = 1e-9;

void CheckOrder(const PlanningProblem& problem, const Order& order) {
  const int n = problem.num_vehicles();
  if (static_cast<int>(order.size()) != n || n < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "order must list each of the " + std::to_string(n) +
                    " vehicles once");
  }
  std::vector<bool> seen(n, false);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "order is not a permutation of the vehicles");
    }
    seen[v] = true;
  }
}

class Combiner {
 public:
  Combiner(const PlanningProblem& problem, PlanResult& result)
      : problem_(problem), result_(result) {}

  Trajectory Vehicle(int v) const {
    return Trajectory::ForVehicle(v, problem_.path_lengths[v]);
  }

  // One planar subproblem: left trajectory on the x axis, right on y.
  Trajectory operator()(const Trajectory& left, const Trajectory& right) {
    const std::vector<Rect> rects =
        ProjectConflicts(left, right, problem_.conflicts);
    const Search2DResult sub =
        Search2D({0.0, 0.0}, {left.length(), right.length()}, rects);
    result_.subproblems.push_back({sub.num_rects, sub.num_nodes});
    return Lift(left, right, sub.path);
  }

 private:
  const PlanningProblem& problem_;
  PlanResult& result_;
};

bool LengthTiedOrBetter(double a, double best) {
  return a <= best + kLengthTieTolerance;
}

int ResolveThreads(int threads) {
  if (threads > 0) return threads;
  if (const char* env = std::getenv("COORDPLAN_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Order Canonicalize(Strategy strategy, const Order& order) {
  return strategy == Strategy::kIncremental ? CanonicalIncrementalOrder(order)
                                            : CanonicalPairwiseOrder(order);
}

OrderOutcome Evaluate(const PlanningProblem& problem, Strategy strategy,
                      const Order& order) {
  OrderOutcome out{order, std::nullopt};
  try {
    out.length = PlanOrder(problem, strategy, order).length();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNoPath) throw;
  }
  return out;
}

void EvaluateAll(const PlanningProblem& problem, Strategy strategy,
                 const std::vector<Order>& orders, int threads,
                 std::vector<OrderOutcome>& outcomes) {
  outcomes.assign(orders.size(), {});
  const int workers =
      std::min<int>(threads, static_cast<int>(std::max<std::size_t>(
                                 1, orders.size())));
  if (workers <= 1) {
    for (std::size_t k = 0; k < orders.size(); ++k) {
      outcomes[k] = Evaluate(problem, strategy, orders[k]);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < orders.size(); k = next++) {
        try {
          outcomes[k] = Evaluate(problem, strategy, orders[k]);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

double PlanningProblem::LowerBound() const {
  double sq = 0.0;
  for (double s : path_lengths) sq += s * s;
  return std::sqrt(sq);
}

std::string_view StrategyName(Strategy s) {
  return s == Strategy::kIncremental ? "incremental" : "pairwise";
}

Strategy ParseStrategy(std::string_view name) {
  if (name == "incremental") return Strategy::kIncremental;
  if (name == "pairwise") return Strategy::kPairwise;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown strategy '" + std::string(name) + "'");
}

PlanResult IncrementalPlan(const PlanningProblem& problem, const Order& order) {
  CheckOrder(problem, order);
  PlanResult result{Trajectory::ForVehicle(order[0], 0.0), order, {}};
  Combiner combine(problem, result);
  Trajectory traj = combine.Vehicle(order[0]);
  if (order.size() >= 2) traj = combine(traj, combine.Vehicle(order[1]));
  for (std::size_t m = 2; m < order.size(); ++m) {
    traj = combine(combine.Vehicle(order[m]), traj);
  }
  result.trajectory = traj.Canonical();
  return result;
}

PlanResult PairwisePlan(const PlanningProblem& problem, const Order& order) {
  CheckOrder(problem, order);
  PlanResult result{Trajectory::ForVehicle(order[0], 0.0), order, {}};
  Combiner combine(problem, result);
  const CoordinationTree tree(static_cast<int>(order.size()));
  std::vector<Trajectory> built;
  built.reserve(tree.nodes().size());
  for (const CoordinationTree::Node& node : tree.nodes()) {
    if (node.left < 0) {
      built.push_back(combine.Vehicle(order[node.first]));
    } else {
      built.push_back(combine(built[node.left], built[node.right]));
    }
  }
  result.trajectory = built.back().Canonical();
  return result;
}

PlanResult PlanOrder(const PlanningProblem& problem, Strategy strategy,
                     const Order& order) {
  return strategy == Strategy::kIncremental ? IncrementalPlan(problem, order)
                                            : PairwisePlan(problem, order);
}

Budget Budget::Parse(std::string_view text) {
  auto bad = [&] {
    return Error(ErrorCode::kInvalidArgument,
                 "budget must be all, count:N or time:S, got '" +
                     std::string(text) + "'");
  };
  if (text == "all") return All();
  if (text.starts_with("count:")) {
    const std::string_view tail = text.substr(6);
    std::uint64_t n = 0;
    const auto r = std::from_chars(tail.data(), tail.data() + tail.size(), n);
    if (r.ec != std::errc() || r.ptr != tail.data() + tail.size() || n == 0) {
      throw bad();
    }
    return Count(n);
  }
  if (text.starts_with("time:")) {
    const std::string_view tail = text.substr(5);
    double s = 0.0;
    const auto r = std::from_chars(tail.data(), tail.data() + tail.size(), s);
    if (r.ec != std::errc() || r.ptr != tail.data() + tail.size() ||
        !(s > 0.0) || !std::isfinite(s)) {
      throw bad();
    }
    return Time(s);
  }
  throw bad();
}

std::string Budget::ToString() const {
  switch (kind) {
    case Kind::kAll:
      return "all";
    case Kind::kCount:
      return "count:" + std::to_string(count);
    case Kind::kTime: {
      // Shortest representation that parses back to the same value.
      char buf[64];
      const auto r = std::to_chars(buf, buf + sizeof(buf), seconds);
      return "time:" + std::string(buf, r.ptr);
    }
  }
  return "all";
}

std::uint64_t CanonicalOrderCount(Strategy strategy, int n) {
  constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();
  if (n > 20) return kSaturated;
  const std::uint64_t f = Factorial(n);
  if (strategy == Strategy::kIncremental) return n < 2 ? 1 : f / 2;
  return f / AutSize(n);
}

BestPlan FindBestPlan(const PlanningProblem& problem, Strategy strategy,
                      const Budget& budget, std::uint64_t seed, int threads) {
  const auto started = std::chrono::steady_clock::now();
  const int n = problem.num_vehicles();
  SweepStats stats;

  if (problem.conflicts.empty()) {
    // Every order yields the straight line; one evaluation settles it.
    Order order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    stats.outcomes.push_back(Evaluate(problem, strategy, order));
  } else if (budget.kind == Budget::Kind::kTime) {
    std::mt19937_64 rng(seed);
    std::set<Order> seen;
    const std::uint64_t total = CanonicalOrderCount(strategy, n);
    const auto deadline =
        started + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(budget.seconds));
    while (seen.size() < total && std::chrono::steady_clock::now() < deadline) {
      Order order = Canonicalize(strategy, RandomOrder(n, rng));
      if (!seen.insert(order).second) continue;
      stats.outcomes.push_back(Evaluate(problem, strategy, order));
    }
  } else {
    std::vector<Order> orders;
    if (budget.kind == Budget::Kind::kAll) {
      orders = strategy == Strategy::kIncremental
                   ? EnumerateIncrementalOrders(n)
                   : EnumeratePairwiseTrees(n);
    } else {
      std::mt19937_64 rng(seed);
      std::set<Order> seen;
      const std::uint64_t target =
          std::min(budget.count, CanonicalOrderCount(strategy, n));
      while (orders.size() < target) {
        Order order = Canonicalize(strategy, RandomOrder(n, rng));
        if (seen.insert(order).second) orders.push_back(std::move(order));
      }
    }
    EvaluateAll(problem, strategy, orders, ResolveThreads(threads),
                stats.outcomes);
  }

  const OrderOutcome* best = nullptr;
  double best_length = std::numeric_limits<double>::infinity();
  for (const OrderOutcome& o : stats.outcomes) {
    if (o.length) best_length = std::min(best_length, *o.length);
  }
  for (const OrderOutcome& o : stats.outcomes) {
    if (!o.length || !LengthTiedOrBetter(*o.length, best_length)) continue;
    if (best == nullptr || o.order < best->order) best = &o;
  }
  if (best == nullptr) {
    throw Error(ErrorCode::kNoFeasibleOrder,
                "none of the " + std::to_string(stats.outcomes.size()) +
                    " evaluated orders produced a trajectory");
  }
  BestPlan out{PlanOrder(problem, strategy, best->order), std::move(stats)};
  out.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  return out;
}

}  // namespace coordplan
