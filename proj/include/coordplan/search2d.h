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

// Shortest monotone paths among axis-aligned rectangles in the plane.
//
// Rectangles are open sets: a path may slide along a rectangle edge or touch
// a corner. A monotone path never decreases either coordinate, so the
// visibility graph over {start, goal, rectangle corners} restricted to
// dominance-ordered pairs is a DAG and a single dynamic-programming pass in
// lexicographic order solves it.

#ifndef COORDPLAN_SEARCH2D_H_
#define COORDPLAN_SEARCH2D_H_

#include <cstddef>
#include <span>
#include <vector>

#include "coordplan/geometry.h"

namespace coordplan {

struct Rect {
  double x_lo = 0.0;
  double x_hi = 0.0;
  double y_lo = 0.0;
  double y_hi = 0.0;
};

// True if `p` is inside the open interior of `r` by more than
// kGeometryTolerance on every side.
bool InsideInterior(Point2 p, const Rect& r);

// True iff the open segment (a, b) misses the open interior of every
// rectangle. A degenerate segment (a == b) is clear iff the point is.
bool SegmentClear(Point2 a, Point2 b, std::span<const Rect> rects);

using Polyline2 = std::vector<Point2>;

double PolylineLength(const Polyline2& line);

struct DagEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  double weight = 0.0;
};

struct VisibilityDag {
  // Lexicographically sorted by (x, y), which is a topological order for
  // componentwise dominance. Duplicate points are merged.
  std::vector<Point2> nodes;
  std::size_t start = 0;
  std::size_t goal = 0;
  std::vector<DagEdge> edges;  // sorted by (to, from)
  std::vector<Rect> rects;     // clipped to the [start, goal] box
};

// Throws Error(kStartInObstacle) / Error(kGoalInObstacle), or
// Error(kInvalidArgument) if start does not dominate goal.
VisibilityDag BuildDag(Point2 start, Point2 goal, std::span<const Rect> rects);

// Minimum-weight start-goal path through `dag`, with collinear interior
// vertices removed. Among equal-length predecessors the one with smaller y,
// then smaller x wins. Throws Error(kNoPath).
Polyline2 ShortestMonotonePath(const VisibilityDag& dag);

struct Search2DResult {
  Polyline2 path;
  double length = 0.0;
  std::size_t num_rects = 0;
  std::size_t num_nodes = 0;
};

// Same optimum and tie-breaking as BuildDag + ShortestMonotonePath, but edges
// are only tested for visibility when they could improve a node's label.
Search2DResult Search2D(Point2 start, Point2 goal, std::span<const Rect> rects);

}  // namespace coordplan

#endif  // COORDPLAN_SEARCH2D_H_
