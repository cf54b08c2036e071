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

#include "coordplan/conflict.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <tuple>

#include "coordplan/error.h"

namespace coordplan {
namespace {

std::string PairName(int i, int j) {
  std::ostringstream os;
  os << "(" << i << ", " << j << ")";
  return os.str();
}

// Parameter range t in [0, 1] for which segment p0 + t (p1 - p0) lies inside
// the closed disc.
std::optional<std::pair<double, double>> SegmentDiscRange(Point2 p0, Point2 p1,
                                                          Point2 c, double r) {
  const Point2 d = p1 - p0;
  const Point2 w = p0 - c;
  const double a = Dot(d, d);
  const double half_b = Dot(d, w);
  const double cc = Dot(w, w) - r * r;
  const double disc = half_b * half_b - a * cc;
  if (disc < 0.0) return std::nullopt;
  const double sq = std::sqrt(disc);
  // Numerically stable pair of roots.
  double t1, t2;
  if (half_b >= 0.0) {
    const double q = -(half_b + sq);
    t1 = q / a;
    t2 = (q == 0.0) ? 0.0 : cc / q;
  } else {
    const double q = -half_b + sq;
    t1 = cc / q;
    t2 = q / a;
  }
  if (t1 > t2) std::swap(t1, t2);
  if (t2 < 0.0 || t1 > 1.0) return std::nullopt;
  return std::make_pair(std::max(t1, 0.0), std::min(t2, 1.0));
}

}  // namespace

ConflictSet::ConflictSet(std::vector<ConflictRect> rects,
                         std::vector<std::string> warnings)
    : rects_(std::move(rects)), warnings_(std::move(warnings)) {
  std::sort(rects_.begin(), rects_.end(),
            [](const ConflictRect& a, const ConflictRect& b) {
              return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
            });
}

std::vector<ConflictRect> ConflictSet::ForPair(int a, int b) const {
  const int i = std::min(a, b);
  const int j = std::max(a, b);
  std::vector<ConflictRect> out;
  for (const ConflictRect& r : rects_) {
    if (r.i == i && r.j == j) out.push_back(r);
  }
  return out;
}

std::vector<IntersectionPoint> DetectIntersections(
    std::span<const PolylinePath> paths,
    const std::set<std::pair<int, int>>& shared_pairs) {
  std::vector<IntersectionPoint> out;
  const int n = static_cast<int>(paths.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const PathIntersections x = SegmentIntersections(paths[i], paths[j]);
      if (x.shared_geometry) {
        if (shared_pairs.count({i, j}) != 0) continue;
        throw Error(ErrorCode::kSharedGeometryUnconfigured,
                    "paths of vehicles " + PairName(i, j) +
                        " overlap but no same-path conflicts are configured");
      }
      if (shared_pairs.count({i, j}) != 0) continue;
      int k = 0;
      for (const PathCrossing& c : x.crossings) {
        out.push_back({i, j, k++, c.s_a, c.s_b, c.point});
      }
    }
  }
  return out;
}

Interval DiscInterval(const PolylinePath& path, double s_center, Point2 center,
                      double radius) {
  if (!(radius > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "disc radius must be positive");
  }
  const auto& v = path.vertices();
  const auto& cum = path.cumulative_length();
  std::vector<Interval> components;
  for (std::size_t m = 0; m < path.num_segments(); ++m) {
    const auto range = SegmentDiscRange(v[m], v[m + 1], center, radius);
    if (!range) continue;
    const double len = cum[m + 1] - cum[m];
    Interval piece{cum[m] + range->first * len, cum[m] + range->second * len};
    if (!components.empty() &&
        piece.lo <= components.back().hi + kGeometryTolerance) {
      components.back().hi = std::max(components.back().hi, piece.hi);
    } else {
      components.push_back(piece);
    }
  }

  std::optional<Interval> home;
  int entries = 0;
  for (const Interval& c : components) {
    const bool contains = c.lo <= s_center + 1e-6 && s_center - 1e-6 <= c.hi;
    if (contains && !home) {
      home = c;
      ++entries;
    } else if (c.width() > kGeometryTolerance) {
      // Tangential touches of the boundary are not entries.
      ++entries;
    }
  }
  if (!home) {
    throw Error(ErrorCode::kInvalidArgument,
                "disc center is not on the path at s = " +
                    std::to_string(s_center));
  }
  if (entries > 1) {
    throw Error(ErrorCode::kMultipleCrossings,
                "path enters the conflict disc around s = " +
                    std::to_string(s_center) + " more than once");
  }
  home->lo = std::clamp(home->lo, 0.0, path.length());
  home->hi = std::clamp(home->hi, 0.0, path.length());
  return *home;
}

ConflictRect DiscToRect(const IntersectionPoint& ip, double radius,
                        std::span<const PolylinePath> paths) {
  const Interval a = DiscInterval(paths[ip.i], ip.s_i, ip.p, radius);
  const Interval b = DiscInterval(paths[ip.j], ip.s_j, ip.p, radius);
  ConflictRect r;
  r.i = ip.i;
  r.j = ip.j;
  r.k = ip.k;
  r.lo_i = a.lo;
  r.hi_i = a.hi;
  r.lo_j = b.lo;
  r.hi_j = b.hi;
  r.center = ip.p;
  r.radius = radius;
  return r;
}

std::vector<ConflictRect> SamePathConflicts(int i, int j,
                                            const PolylinePath& path,
                                            double spacing, double radius) {
  if (!(spacing > 0.0) || !(radius > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "same-path spacing and radius must be positive");
  }
  if (i > j) std::swap(i, j);
  std::vector<ConflictRect> out;
  int k = 0;
  for (double s = spacing; s < path.length(); s = spacing * (k + 1)) {
    const Point2 p = path.PointAt(s);
    const Interval iv = DiscInterval(path, s, p, radius);
    ConflictRect r;
    r.i = i;
    r.j = j;
    r.k = k++;
    r.lo_i = r.lo_j = iv.lo;
    r.hi_i = r.hi_j = iv.hi;
    r.center = p;
    r.radius = radius;
    r.same_path = true;
    out.push_back(r);
  }
  return out;
}

ConflictSet BuildConflictSet(std::span<const PolylinePath> paths,
                             const ConflictConfig& config) {
  if (!(config.radius > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "conflict radius must be positive");
  }
  const int n = static_cast<int>(paths.size());
  std::set<std::pair<int, int>> shared;
  for (const SamePathGroup& g : config.same_path) {
    for (std::size_t a = 0; a < g.vehicles.size(); ++a) {
      for (std::size_t b = a + 1; b < g.vehicles.size(); ++b) {
        const int i = std::min(g.vehicles[a], g.vehicles[b]);
        const int j = std::max(g.vehicles[a], g.vehicles[b]);
        if (i < 0 || j >= n || i == j) {
          throw Error(ErrorCode::kInvalidArgument,
                      "bad same-path vehicle pair " + PairName(i, j));
        }
        shared.insert({i, j});
      }
    }
  }

  std::vector<ConflictRect> rects;
  std::vector<std::string> warnings;
  auto keep = [&](const ConflictRect& r) {
    if (r.hi_i - r.lo_i <= kGeometryTolerance ||
        r.hi_j - r.lo_j <= kGeometryTolerance) {
      warnings.push_back("dropped degenerate conflict " + PairName(r.i, r.j) +
                         " #" + std::to_string(r.k));
      return;
    }
    rects.push_back(r);
  };

  for (const IntersectionPoint& ip : DetectIntersections(paths, shared)) {
    double radius = config.radius;
    for (const RadiusOverride& o : config.overrides) {
      if (std::min(o.i, o.j) == ip.i && std::max(o.i, o.j) == ip.j &&
          o.k == ip.k) {
        radius = o.radius;
      }
    }
    keep(DiscToRect(ip, radius, paths));
  }
  for (const SamePathGroup& g : config.same_path) {
    for (std::size_t a = 0; a < g.vehicles.size(); ++a) {
      for (std::size_t b = a + 1; b < g.vehicles.size(); ++b) {
        const int i = std::min(g.vehicles[a], g.vehicles[b]);
        const int j = std::max(g.vehicles[a], g.vehicles[b]);
        for (const ConflictRect& r :
             SamePathConflicts(i, j, paths[i], g.spacing, g.radius)) {
          keep(r);
        }
      }
    }
  }

  for (const ConflictRect& r : rects) {
    const double len_i = paths[r.i].length();
    const double len_j = paths[r.j].length();
    if (r.lo_i <= kGeometryTolerance && r.lo_j <= kGeometryTolerance) {
      throw Error(ErrorCode::kStartInConflict,
                  "vehicles " + PairName(r.i, r.j) +
                      " both start inside conflict #" + std::to_string(r.k));
    }
    if (r.hi_i >= len_i - kGeometryTolerance &&
        r.hi_j >= len_j - kGeometryTolerance) {
      throw Error(ErrorCode::kGoalInConflict,
                  "vehicles " + PairName(r.i, r.j) +
                      " both end inside conflict #" + std::to_string(r.k));
    }
  }
  return ConflictSet(std::move(rects), std::move(warnings));
}

}  // namespace coordplan
