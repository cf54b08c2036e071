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

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "coordplan/error.h"

namespace coordplan {

std::string_view InitialSpeedName(InitialSpeed s) {
  return s == InitialSpeed::kRest ? "rest" : "reference";
}

InitialSpeed ParseInitialSpeed(std::string_view name) {
  if (name == "rest") return InitialSpeed::kRest;
  if (name == "reference") return InitialSpeed::kReference;
  throw Error(ErrorCode::kInvalidArgument,
              "initial speed must be rest or reference, got '" +
                  std::string(name) + "'");
}

SimLog Simulate(const std::vector<PolylinePath>& vehicle_paths,
                const Schedule& schedule, const ConflictSet& conflicts,
                const SimConfig& config) {
  config.nmpc.Validate();
  config.params.Validate();
  const int n = static_cast<int>(vehicle_paths.size());
  const double dt = config.nmpc.dt;

  std::vector<std::size_t> axis(n);
  for (int v = 0; v < n; ++v) {
    const auto a = schedule.AxisOf(v);
    if (!a) {
      throw Error(ErrorCode::kInvalidArgument,
                  "schedule has no axis for vehicle " + std::to_string(v));
    }
    axis[v] = *a;
  }

  SimLog log;
  log.dt = dt;
  log.records.resize(n);
  log.max_position_error.assign(n, 0.0);
  log.max_speed_error.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      log.pair_distances.push_back(
          {i, j, std::numeric_limits<double>::infinity(), 0.0});
    }
  }

  std::vector<VehicleState> state(n);
  std::vector<std::vector<ControlInput>> warm(n);
  std::vector<ControlInput> last(n);
  for (int v = 0; v < n; ++v) {
    const PolylinePath& path = vehicle_paths[v];
    const double s0 = std::clamp(schedule.PositionAt(axis[v], 0.0), 0.0,
                                 path.length());
    const Point2 p = path.PointAt(s0);
    const Point2 tan = path.TangentAt(s0);
    state[v].x = p.x;
    state[v].y = p.y;
    state[v].psi = std::atan2(tan.y, tan.x);
    if (config.initial_speed == InitialSpeed::kReference) {
      state[v].v = schedule.SpeedAt(axis[v], 0.0);
    }
  }

  const double end_time = schedule.makespan();
  const std::size_t cap = static_cast<std::size_t>(
      std::ceil((end_time + config.settle_time) / dt));
  auto done = [&](int v, double t) {
    const PolylinePath& path = vehicle_paths[v];
    const Point2 goal = path.vertices().back();
    return t >= end_time &&
           Distance({state[v].x, state[v].y}, goal) <= config.goal_tolerance &&
           std::abs(state[v].v) <= config.stop_speed;
  };

  for (std::size_t step = 0;; ++step) {
    const double t = static_cast<double>(step) * dt;
    bool all_done = true;
    for (int v = 0; v < n && all_done; ++v) all_done = done(v, t);
    if (all_done) {
      log.completed = true;
      break;
    }
    if (step >= cap) break;

    for (std::size_t r = 0; r < conflicts.rects().size(); ++r) {
      const ConflictRect& c = conflicts.rects()[r];
      if (c.i >= n || c.j >= n) continue;
      const double di = Distance({state[c.i].x, state[c.i].y}, c.center);
      const double dj = Distance({state[c.j].x, state[c.j].y}, c.center);
      const double scaled = c.radius * config.occupancy_radius_scale;
      if (di < scaled && dj < scaled) {
        log.violations.push_back({step, t, r, c.i, c.j});
      }
      if (di < c.radius && dj < c.radius) ++log.full_radius_overlaps;
    }
    for (PairDistance& pd : log.pair_distances) {
      const double d = Distance({state[pd.i].x, state[pd.i].y},
                                {state[pd.j].x, state[pd.j].y});
      if (d < pd.min_distance) {
        pd.min_distance = d;
        pd.t = t;
      }
    }

    for (int v = 0; v < n; ++v) {
      const std::vector<ReferenceState> refs = ReferenceForHorizon(
          vehicle_paths[v], schedule, axis[v], t, config.nmpc);
      const NmpcSolution sol = NmpcSolve(state[v], refs, config.params,
                                         config.nmpc, warm[v], last[v]);
      if (!sol.converged) ++log.unconverged_solves;
      if (sol.stalled) ++log.stalled_solves;
      const ControlInput u = sol.inputs.front();
      SimRecord rec{t,          state[v],   u,          refs[0].s,
                    refs[0].v,  refs[0].x,  refs[0].y,  sol.converged};
      log.max_position_error[v] =
          std::max(log.max_position_error[v],
                   Distance({state[v].x, state[v].y}, {refs[0].x, refs[0].y}));
      log.max_speed_error[v] =
          std::max(log.max_speed_error[v], std::abs(state[v].v - refs[0].v));
      log.records[v].push_back(rec);
      warm[v] = sol.inputs;
      last[v] = u;
      state[v] = StepDynamics(state[v], u, config.params, dt);
    }
    log.steps = step + 1;
  }
  return log;
}

}  // namespace coordplan
