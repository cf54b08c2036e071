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

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>

#include "coordplan/error.h"
#include "coordplan/search2d.h"

namespace coordplan {
namespace {

constexpr int kMaxOracleVehicles = 3;
constexpr std::size_t kMaxLatticePoints = 50'000'000;

struct PairRects {
  int i = 0;
  int j = 0;
  std::vector<Rect> rects;
};

std::vector<PairRects> GroupByPair(const ConflictSet& conflicts) {
  std::vector<PairRects> out;
  for (const ConflictRect& c : conflicts.rects()) {
    if (out.empty() || out.back().i != c.i || out.back().j != c.j) {
      out.push_back({c.i, c.j, {}});
    }
    out.back().rects.push_back({c.lo_i, c.hi_i, c.lo_j, c.hi_j});
  }
  return out;
}

std::vector<std::array<int, kMaxOracleVehicles>> MoveSet(int dims, int k) {
  std::vector<std::array<int, kMaxOracleVehicles>> out;
  std::array<int, kMaxOracleVehicles> d{};
  std::function<void(int)> rec = [&](int axis) {
    if (axis == dims) {
      int g = 0;
      for (int a = 0; a < dims; ++a) g = std::gcd(g, d[a]);
      if (g == 1) out.push_back(d);
      return;
    }
    for (int v = 0; v <= k; ++v) {
      d[axis] = v;
      rec(axis + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

GridResult GridPlan(const std::vector<double>& path_lengths,
                    const ConflictSet& conflicts, const GridSpec& spec) {
  const int dims = static_cast<int>(path_lengths.size());
  if (dims > kMaxOracleVehicles) {
    throw Error(ErrorCode::kTooLarge,
                "grid oracle supports at most 3 vehicles; got " +
                    std::to_string(dims));
  }
  if (dims < 1 || !(spec.resolution > 0.0) || spec.max_step < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "grid oracle needs vehicles, resolution > 0 and max_step >= 1");
  }

  std::array<std::int64_t, kMaxOracleVehicles> cells{};
  std::array<double, kMaxOracleVehicles> spacing{};
  std::array<std::int64_t, kMaxOracleVehicles> stride{};
  std::size_t total = 1;
  for (int a = 0; a < dims; ++a) {
    const double s = path_lengths[a];
    cells[a] = s > 0.0 ? std::max<std::int64_t>(
                             1, static_cast<std::int64_t>(
                                    std::ceil(s / spec.resolution - 1e-9)))
                       : 0;
    spacing[a] = cells[a] > 0 ? s / static_cast<double>(cells[a]) : 0.0;
    stride[a] = static_cast<std::int64_t>(total);
    total *= static_cast<std::size_t>(cells[a] + 1);
    if (total > kMaxLatticePoints) {
      throw Error(ErrorCode::kTooLarge,
                  "lattice exceeds " + std::to_string(kMaxLatticePoints) +
                      " points; use a coarser resolution");
    }
  }

  const std::vector<PairRects> pairs = GroupByPair(conflicts);
  const auto moves = MoveSet(dims, spec.max_step);

  using Coord = std::array<std::int64_t, kMaxOracleVehicles>;
  auto coord_of = [&](std::size_t idx) {
    Coord c{};
    for (int a = 0; a < dims; ++a) {
      c[a] = static_cast<std::int64_t>(idx) / stride[a] % (cells[a] + 1);
    }
    return c;
  };
  auto value = [&](const Coord& c, int a) {
    return c[a] == cells[a] ? path_lengths[a]
                            : static_cast<double>(c[a]) * spacing[a];
  };
  auto blocked = [&](const Coord& c) {
    for (const PairRects& p : pairs) {
      const Point2 q{value(c, p.i), value(c, p.j)};
      for (const Rect& r : p.rects) {
        if (InsideInterior(q, r)) return true;
      }
    }
    return false;
  };
  auto edge_clear = [&](const Coord& c0, const Coord& c1) {
    for (const PairRects& p : pairs) {
      const Point2 q0{value(c0, p.i), value(c0, p.j)};
      const Point2 q1{value(c1, p.i), value(c1, p.j)};
      if (!SegmentClear(q0, q1, p.rects)) return false;
    }
    return true;
  };
  auto heuristic = [&](const Coord& c) {
    double sq = 0.0;
    for (int a = 0; a < dims; ++a) {
      const double d = path_lengths[a] - value(c, a);
      sq += d * d;
    }
    return std::sqrt(sq);
  };

  const std::size_t goal = total - 1;
  Coord start_coord{};
  if (blocked(start_coord)) {
    throw Error(ErrorCode::kNoPath, "oracle start lattice point is blocked");
  }

  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> g(total, kInf);
  std::vector<std::int64_t> parent(total, -1);
  std::vector<std::uint8_t> closed(total, 0);
  using Entry = std::pair<double, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> open;
  g[0] = 0.0;
  open.push({heuristic(start_coord), 0});
  std::size_t expanded = 0;
  while (!open.empty()) {
    const std::size_t u = open.top().second;
    open.pop();
    if (closed[u]) continue;
    closed[u] = 1;
    ++expanded;
    if (u == goal) break;
    const Coord cu = coord_of(u);
    for (const auto& d : moves) {
      Coord cv = cu;
      bool inside = true;
      double step_sq = 0.0;
      for (int a = 0; a < dims && inside; ++a) {
        cv[a] += d[a];
        inside = cv[a] <= cells[a];
      }
      if (!inside) continue;
      std::size_t v = 0;
      for (int a = 0; a < dims; ++a) {
        v += static_cast<std::size_t>(cv[a] * stride[a]);
        const double dv = value(cv, a) - value(cu, a);
        step_sq += dv * dv;
      }
      if (closed[v]) continue;
      const double cand = g[u] + std::sqrt(step_sq);
      if (!(cand < g[v])) continue;
      if (blocked(cv) || !edge_clear(cu, cv)) continue;
      g[v] = cand;
      parent[v] = static_cast<std::int64_t>(u);
      open.push({cand + heuristic(cv), v});
    }
  }
  if (!closed[goal]) {
    throw Error(ErrorCode::kNoPath, "oracle lattice has no monotone path");
  }

  std::vector<std::vector<double>> pts;
  for (std::int64_t n = static_cast<std::int64_t>(goal); n >= 0;
       n = parent[n]) {
    const Coord c = coord_of(static_cast<std::size_t>(n));
    std::vector<double> p(dims);
    for (int a = 0; a < dims; ++a) p[a] = value(c, a);
    pts.push_back(std::move(p));
  }
  std::reverse(pts.begin(), pts.end());
  std::vector<int> axes(dims);
  std::iota(axes.begin(), axes.end(), 0);
  GridResult out{Trajectory(std::move(axes), std::move(pts)), g[goal], total,
                 expanded};
  return out;
}

double Gap(double planner_length, double oracle_length) {
  if (!(oracle_length > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "oracle length must be positive");
  }
  return planner_length / oracle_length;
}

}  // namespace coordplan
