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

#include "support/test_support.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "coordplan/error.h"

namespace coordplan::testing {
namespace {

double Uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Point2 OnSide(std::mt19937_64& rng, int side, double size) {
  const double t = Uniform(rng, 0.1 * size, 0.9 * size);
  switch (side) {
    case 0: return {t, 0.0};
    case 1: return {size, t};
    case 2: return {t, size};
    default: return {0.0, t};
  }
}

}  // namespace

Fixture MakeFixture(std::vector<PolylinePath> paths, ConflictConfig config) {
  Fixture f;
  f.paths = std::move(paths);
  f.config = std::move(config);
  f.conflicts = BuildConflictSet(f.paths, f.config);
  for (const PolylinePath& p : f.paths) {
    f.problem.path_lengths.push_back(p.length());
  }
  f.problem.conflicts = f.conflicts;
  return f;
}

Fixture PerpendicularCrossing(double radius) {
  ConflictConfig config;
  config.radius = radius;
  return MakeFixture({PolylinePath::Build({{-30, 0}, {30, 0}}),
                      PolylinePath::Build({{0, -30}, {0, 30}})},
                     config);
}

Fixture ThreeVehicleDoubleCrossing() {
  ConflictConfig config;
  config.radius = 5.0;
  return MakeFixture(
      {PolylinePath::Build({{0, 0}, {100, 0}}),
       PolylinePath::Build({{50, -30}, {50, 70}}),
       PolylinePath::Build({{39, -20}, {70, -20}, {70, 20}, {30, 20}})},
      config);
}

Fixture RandomScenario(std::mt19937_64& rng,
                       const RandomScenarioOptions& options) {
  const double size = options.box_size;
  for (;;) {
    const int n = std::uniform_int_distribution<int>(options.min_vehicles,
                                                     options.max_vehicles)(rng);
    const bool same_path =
        n >= 3 && Uniform(rng, 0.0, 1.0) < options.same_path_probability;
    ConflictConfig config;
    config.radius = Uniform(rng, options.min_radius, options.max_radius);
    std::vector<PolylinePath> paths;
    try {
      for (int v = 0; v < n; ++v) {
        if (same_path && v == n - 1) {
          paths.push_back(paths.front());
          continue;
        }
        const int side = std::uniform_int_distribution<int>(0, 3)(rng);
        const Point2 a = OnSide(rng, side, size);
        const Point2 b = OnSide(rng, (side + 2) % 4, size);
        const Point2 mid{Uniform(rng, 0.3 * size, 0.7 * size),
                         Uniform(rng, 0.3 * size, 0.7 * size)};
        paths.push_back(PolylinePath::Build({a, mid, b}));
      }
      if (same_path) {
        const double spacing = Uniform(rng, 0.15, 0.3) * size;
        config.same_path.push_back(
            {{0, n - 1}, spacing, Uniform(rng, 0.3, 0.6) * spacing});
      }
      Fixture f = MakeFixture(std::move(paths), config);
      if (f.conflicts.size() > options.max_rects) continue;
      return f;
    } catch (const Error&) {
      continue;  // invalid draw: start/goal in conflict, re-entry, ...
    }
  }
}

std::vector<Rect> RandomRects(std::mt19937_64& rng, int count, double size,
                              double min_side, double max_side) {
  std::vector<Rect> out;
  for (int k = 0; k < count; ++k) {
    const double w = Uniform(rng, min_side, max_side);
    const double h = Uniform(rng, min_side, max_side);
    const double x = Uniform(rng, 0.5, size - 0.5 - w);
    const double y = Uniform(rng, 0.5, size - 0.5 - h);
    out.push_back({x, x + w, y, y + h});
  }
  return out;
}

Interval BisectDiscInterval(const PolylinePath& path, double s_center,
                            Point2 center, double radius) {
  const double step = 1e-3;
  auto inside = [&](double s) {
    return Distance(path.PointAt(s), center) <= radius;
  };
  auto boundary = [&](double dir) {
    double prev = s_center;
    for (;;) {
      const double s = std::clamp(prev + dir * step, 0.0, path.length());
      if (!inside(s)) {
        double in = prev;
        double out = s;
        for (int it = 0; it < 200; ++it) {
          const double m = 0.5 * (in + out);
          (inside(m) ? in : out) = m;
        }
        return in;
      }
      if (s == 0.0 || s == path.length()) return s;
      prev = s;
    }
  };
  return {boundary(-1.0), boundary(1.0)};
}

std::size_t CountPairwiseTreeClasses(int n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::set<std::string> classes;
  do {
    std::vector<std::string> level;
    for (int v : order) level.push_back(std::to_string(v));
    while (level.size() > 1) {
      std::vector<std::string> next;
      for (std::size_t k = 0; k + 1 < level.size(); k += 2) {
        const auto& [lo, hi] = std::minmax(level[k], level[k + 1]);
        next.push_back("(" + lo + "|" + hi + ")");
      }
      if (level.size() % 2 == 1) next.push_back(level.back());
      level = std::move(next);
    }
    classes.insert(level.front());
  } while (std::next_permutation(order.begin(), order.end()));
  return classes.size();
}

std::size_t CountIncrementalClasses(int n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::set<std::vector<int>> classes;
  do {
    std::vector<int> key = order;
    if (n >= 2) std::sort(key.begin(), key.begin() + 2);
    classes.insert(key);
  } while (std::next_permutation(order.begin(), order.end()));
  return classes.size();
}

double SingleRectShortest(double gx, double gy, const Rect& r) {
  // Does the diagonal cross the open interior? Compare the line's y-range
  // over (x_lo, x_hi) with (y_lo, y_hi).
  const double slope = gy / gx;
  const double ya = slope * r.x_lo;
  const double yb = slope * r.x_hi;
  const bool blocked = yb > r.y_lo && ya < r.y_hi;
  if (!blocked) return std::hypot(gx, gy);
  const double below = std::hypot(r.x_hi, r.y_lo) +
                       std::hypot(gx - r.x_hi, gy - r.y_lo);
  const double above = std::hypot(r.x_lo, r.y_hi) +
                       std::hypot(gx - r.x_lo, gy - r.y_hi);
  return std::min(below, above);
}

}  // namespace coordplan::testing
