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

// Conflict regions between pairs of vehicles. A disc around each physical
// crossing point becomes an axis-aligned rectangle in the pair's (s_i, s_j)
// plane; the union of those rectangles over all pairs is the obstacle set of
// the joint configuration space.

#ifndef COORDPLAN_CONFLICT_H_
#define COORDPLAN_CONFLICT_H_

#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coordplan/geometry.h"

namespace coordplan {

struct IntersectionPoint {
  int i = 0;  // i < j
  int j = 0;
  int k = 0;  // ordinal within the pair, in order of increasing s_i
  double s_i = 0.0;
  double s_j = 0.0;
  Point2 p;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double width() const { return hi - lo; }
};

struct ConflictRect {
  int i = 0;
  int j = 0;
  int k = 0;
  double lo_i = 0.0;
  double hi_i = 0.0;
  double lo_j = 0.0;
  double hi_j = 0.0;
  // The physical disc the rectangle was generated from.
  Point2 center;
  double radius = 0.0;
  bool same_path = false;
};

struct RadiusOverride {
  int i = 0;
  int j = 0;
  int k = 0;
  double radius = 0.0;
};

// Vehicles that drive the same path geometry. Every pair in the group gets a
// chain of evenly spaced conflict discs instead of crossing-derived ones.
struct SamePathGroup {
  std::vector<int> vehicles;
  double spacing = 0.0;
  double radius = 0.0;
};

struct ConflictConfig {
  double radius = 10.0;
  std::vector<RadiusOverride> overrides;
  std::vector<SamePathGroup> same_path;
};

class ConflictSet {
 public:
  ConflictSet() = default;
  ConflictSet(std::vector<ConflictRect> rects, std::vector<std::string> warnings);

  const std::vector<ConflictRect>& rects() const { return rects_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  std::size_t size() const { return rects_.size(); }
  bool empty() const { return rects_.empty(); }

  // Rectangles of one vehicle pair (order of the arguments is irrelevant).
  std::vector<ConflictRect> ForPair(int a, int b) const;

 private:
  std::vector<ConflictRect> rects_;  // sorted by (i, j, k)
  std::vector<std::string> warnings_;
};

// Transversal crossings for every pair i < j. Pairs whose geometry overlaps
// collinearly must be listed in `shared_pairs` (as (min, max)); they are
// skipped. Otherwise throws Error(kSharedGeometryUnconfigured).
std::vector<IntersectionPoint> DetectIntersections(
    std::span<const PolylinePath> paths,
    const std::set<std::pair<int, int>>& shared_pairs = {});

// Arc-length interval over which `path` lies inside the closed disc of
// `radius` around `center`. The interval is the connected component that
// contains `s_center`. Throws Error(kMultipleCrossings) if the path enters the
// disc more than once.
Interval DiscInterval(const PolylinePath& path, double s_center, Point2 center,
                      double radius);

ConflictRect DiscToRect(const IntersectionPoint& ip, double radius,
                        std::span<const PolylinePath> paths);

// Discs centered at s = spacing, 2 * spacing, ... < length on a path shared
// by vehicles i and j.
std::vector<ConflictRect> SamePathConflicts(int i, int j,
                                            const PolylinePath& path,
                                            double spacing, double radius);

// Union of crossing-derived and same-path rectangles. Throws
// Error(kStartInConflict) if both vehicles of a pair begin inside the same
// disc, Error(kGoalInConflict) if both end inside it.
ConflictSet BuildConflictSet(std::span<const PolylinePath> paths,
                             const ConflictConfig& config);

}  // namespace coordplan

#endif  // COORDPLAN_CONFLICT_H_
