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

#include "coordplan/profile.h"

#include <algorithm>

#include "coordplan/error.h"

namespace coordplan {

VelocityProfile UnitVelocityProfile(const Trajectory& traj) {
  VelocityProfile out;
  out.axes = traj.axes();
  const auto& w = traj.waypoints();
  const auto& cum = traj.breakpoints();
  out.waypoints.push_back(w.front());
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    const double len = cum[k + 1] - cum[k];
    if (!(len > 0.0)) continue;
    std::vector<double> u(traj.dim());
    for (std::size_t a = 0; a < u.size(); ++a) {
      u[a] = std::max(0.0, (w[k + 1][a] - w[k][a]) / len);
    }
    out.directions.push_back(std::move(u));
    out.lengths.push_back(len);
    out.waypoints.push_back(w[k + 1]);
  }
  return out;
}

Schedule ReferenceSchedule(const VelocityProfile& profile, double v_max) {
  if (!(v_max > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "v_max must be positive");
  }
  Schedule out;
  out.axes = profile.axes;
  out.times.push_back(0.0);
  out.positions.push_back(profile.waypoints.front());
  for (std::size_t m = 0; m < profile.directions.size(); ++m) {
    const std::vector<double>& u = profile.directions[m];
    const double top = *std::max_element(u.begin(), u.end());
    if (!(top > 0.0)) {
      throw Error(ErrorCode::kZeroSegment,
                  "segment " + std::to_string(m) + " moves no vehicle");
    }
    std::vector<double> speed(u.size());
    for (std::size_t a = 0; a < u.size(); ++a) speed[a] = u[a] / top * v_max;
    out.speeds.push_back(std::move(speed));
    out.times.push_back(out.times.back() + profile.lengths[m] * top / v_max);
    out.positions.push_back(profile.waypoints[m + 1]);
  }
  return out;
}

double Schedule::PositionAt(std::size_t axis, double t) const {
  if (!(t > 0.0)) return positions.front()[axis];
  if (t >= makespan()) return positions.back()[axis];
  const auto it = std::upper_bound(times.begin(), times.end(), t);
  const std::size_t m = static_cast<std::size_t>(it - times.begin()) - 1;
  const double p0 = positions[m][axis];
  const double p1 = positions[m + 1][axis];
  const double v = p0 + speeds[m][axis] * (t - times[m]);
  return std::clamp(v, p0, p1);
}

double Schedule::SpeedAt(std::size_t axis, double t) const {
  if (t < 0.0 || t >= makespan()) return 0.0;
  const auto it = std::upper_bound(times.begin(), times.end(), t);
  const std::size_t m = static_cast<std::size_t>(it - times.begin()) - 1;
  return speeds[m][axis];
}

std::optional<std::size_t> Schedule::AxisOf(int vehicle) const {
  for (std::size_t a = 0; a < axes.size(); ++a) {
    if (axes[a] == vehicle) return a;
  }
  return std::nullopt;
}

}  // namespace coordplan
