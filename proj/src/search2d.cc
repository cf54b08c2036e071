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

#include "coordplan/search2d.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <utility>

#include "coordplan/error.h"

namespace coordplan {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Two path lengths closer than this are considered tied.
constexpr double kTieTolerance = 1e-10;

bool LexLess(Point2 a, Point2 b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

// Tie-break order for predecessors: smaller y, then smaller x.
bool PreferPredecessor(Point2 a, Point2 b) {
  return a.y < b.y || (a.y == b.y && a.x < b.x);
}

bool Dominates(Point2 lo, Point2 hi) { return hi.x >= lo.x && hi.y >= lo.y; }

// Open interval (t_lo, t_hi) of the line a + t d that lies strictly between
// lo and hi along one axis.
bool ClipAxis(double a, double d, double lo, double hi, double& t_lo,
              double& t_hi) {
  if (d == 0.0) return a > lo && a < hi;
  double t0 = (lo - a) / d;
  double t1 = (hi - a) / d;
  if (t0 > t1) std::swap(t0, t1);
  t_lo = std::max(t_lo, t0);
  t_hi = std::min(t_hi, t1);
  return t_lo < t_hi;
}

bool SegmentHitsRect(Point2 a, Point2 b, const Rect& r) {
  const double tol = kGeometryTolerance;
  const double xl = r.x_lo + tol;
  const double xh = r.x_hi - tol;
  const double yl = r.y_lo + tol;
  const double yh = r.y_hi - tol;
  if (xl >= xh || yl >= yh) return false;
  double t_lo = 0.0;
  double t_hi = 1.0;
  const Point2 d = b - a;
  if (d.x == 0.0 && d.y == 0.0) return InsideInterior(a, r);
  if (!ClipAxis(a.x, d.x, xl, xh, t_lo, t_hi)) return false;
  if (!ClipAxis(a.y, d.y, yl, yh, t_lo, t_hi)) return false;
  return t_lo < t_hi;
}

std::vector<Rect> ClipRects(Point2 start, Point2 goal,
                            std::span<const Rect> rects) {
  if (start.x > goal.x || start.y > goal.y) {
    throw Error(ErrorCode::kInvalidArgument,
                "goal does not dominate start componentwise");
  }
  std::vector<Rect> clipped;
  clipped.reserve(rects.size());
  for (const Rect& r : rects) {
    if (InsideInterior(start, r)) {
      throw Error(ErrorCode::kStartInObstacle, "start lies inside a rectangle");
    }
    if (InsideInterior(goal, r)) {
      throw Error(ErrorCode::kGoalInObstacle, "goal lies inside a rectangle");
    }
    Rect c{std::max(r.x_lo, start.x), std::min(r.x_hi, goal.x),
           std::max(r.y_lo, start.y), std::min(r.y_hi, goal.y)};
    if (c.x_hi - c.x_lo <= kGeometryTolerance ||
        c.y_hi - c.y_lo <= kGeometryTolerance) {
      continue;
    }
    clipped.push_back(c);
  }
  return clipped;
}

// Start, goal and every corner, sorted lexicographically and deduplicated.
std::vector<Point2> CollectNodes(Point2 start, Point2 goal,
                                 std::span<const Rect> clipped) {
  std::vector<Point2> nodes;
  nodes.reserve(4 * clipped.size() + 2);
  nodes.push_back(start);
  nodes.push_back(goal);
  for (const Rect& r : clipped) {
    nodes.push_back({r.x_lo, r.y_lo});
    nodes.push_back({r.x_lo, r.y_hi});
    nodes.push_back({r.x_hi, r.y_lo});
    nodes.push_back({r.x_hi, r.y_hi});
  }
  std::sort(nodes.begin(), nodes.end(), LexLess);
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return nodes;
}

std::size_t IndexOf(const std::vector<Point2>& nodes, Point2 p) {
  return static_cast<std::size_t>(
      std::lower_bound(nodes.begin(), nodes.end(), p, LexLess) - nodes.begin());
}

Polyline2 ElideCollinear(const Polyline2& in) {
  if (in.size() <= 2) return in;
  Polyline2 out;
  out.push_back(in.front());
  for (std::size_t k = 1; k + 1 < in.size(); ++k) {
    const Point2 d1 = in[k] - out.back();
    const Point2 d2 = in[k + 1] - in[k];
    const bool collinear =
        std::abs(Cross(d1, d2)) <= 1e-12 * Norm(d1) * Norm(d2) &&
        Dot(d1, d2) >= 0.0;
    if (!collinear) out.push_back(in[k]);
  }
  out.push_back(in.back());
  return out;
}

Polyline2 Backtrack(const std::vector<Point2>& nodes,
                    const std::vector<std::size_t>& parent, std::size_t start,
                    std::size_t goal) {
  Polyline2 rev;
  for (std::size_t v = goal; v != start; v = parent[v]) rev.push_back(nodes[v]);
  rev.push_back(nodes[start]);
  std::reverse(rev.begin(), rev.end());
  return ElideCollinear(rev);
}

}  // namespace

bool InsideInterior(Point2 p, const Rect& r) {
  const double tol = kGeometryTolerance;
  return p.x > r.x_lo + tol && p.x < r.x_hi - tol && p.y > r.y_lo + tol &&
         p.y < r.y_hi - tol;
}

bool SegmentClear(Point2 a, Point2 b, std::span<const Rect> rects) {
  for (const Rect& r : rects) {
    if (SegmentHitsRect(a, b, r)) return false;
  }
  return true;
}

double PolylineLength(const Polyline2& line) {
  double total = 0.0;
  for (std::size_t k = 1; k < line.size(); ++k) {
    total += Distance(line[k - 1], line[k]);
  }
  return total;
}

VisibilityDag BuildDag(Point2 start, Point2 goal, std::span<const Rect> rects) {
  VisibilityDag dag;
  dag.rects = ClipRects(start, goal, rects);
  dag.nodes = CollectNodes(start, goal, dag.rects);
  dag.start = IndexOf(dag.nodes, start);
  dag.goal = IndexOf(dag.nodes, goal);
  const std::size_t n = dag.nodes.size();
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t u = 0; u < v; ++u) {
      if (!Dominates(dag.nodes[u], dag.nodes[v])) continue;
      if (!SegmentClear(dag.nodes[u], dag.nodes[v], dag.rects)) continue;
      dag.edges.push_back({u, v, Distance(dag.nodes[u], dag.nodes[v])});
    }
  }
  return dag;
}

Polyline2 ShortestMonotonePath(const VisibilityDag& dag) {
  const std::size_t n = dag.nodes.size();
  std::vector<double> dist(n, kInf);
  std::vector<std::size_t> parent(n, n);
  dist[dag.start] = 0.0;
  // Edges are grouped by target, and targets appear in topological order.
  std::size_t e = 0;
  while (e < dag.edges.size()) {
    const std::size_t v = dag.edges[e].to;
    std::size_t end = e;
    double best = kInf;
    while (end < dag.edges.size() && dag.edges[end].to == v) {
      const DagEdge& edge = dag.edges[end];
      best = std::min(best, dist[edge.from] + edge.weight);
      ++end;
    }
    if (best < kInf && v != dag.start) {
      std::size_t pick = n;
      for (std::size_t k = e; k < end; ++k) {
        const DagEdge& edge = dag.edges[k];
        if (dist[edge.from] + edge.weight > best + kTieTolerance) continue;
        if (pick == n ||
            PreferPredecessor(dag.nodes[edge.from], dag.nodes[pick])) {
          pick = edge.from;
        }
      }
      dist[v] = best;
      parent[v] = pick;
    }
    e = end;
  }
  if (dist[dag.goal] == kInf) {
    throw Error(ErrorCode::kNoPath, "goal unreachable by a monotone path");
  }
  return Backtrack(dag.nodes, parent, dag.start, dag.goal);
}

Search2DResult Search2D(Point2 start, Point2 goal, std::span<const Rect> rects) {
  const std::vector<Rect> clipped = ClipRects(start, goal, rects);
  std::vector<Point2> nodes = CollectNodes(start, goal, clipped);
  // Corners buried inside another rectangle can never be on a path.
  std::erase_if(nodes, [&](Point2 p) {
    return std::any_of(clipped.begin(), clipped.end(),
                       [&](const Rect& r) { return InsideInterior(p, r); });
  });
  const std::size_t n = nodes.size();
  const std::size_t s = IndexOf(nodes, start);
  const std::size_t g = IndexOf(nodes, goal);

  std::vector<double> dist(n, kInf);
  std::vector<std::size_t> parent(n, n);
  dist[s] = 0.0;

  using Candidate = std::pair<double, std::size_t>;
  std::vector<Candidate> heap;
  for (std::size_t v = s + 1; v < n; ++v) {
    heap.clear();
    for (std::size_t u = s; u < v; ++u) {
      if (dist[u] == kInf || !Dominates(nodes[u], nodes[v])) continue;
      heap.emplace_back(dist[u] + Distance(nodes[u], nodes[v]), u);
    }
    auto cmp = [](const Candidate& a, const Candidate& b) {
      return a.first > b.first;
    };
    std::make_heap(heap.begin(), heap.end(), cmp);
    double best = kInf;
    std::size_t pick = n;
    while (!heap.empty()) {
      std::pop_heap(heap.begin(), heap.end(), cmp);
      const auto [cost, u] = heap.back();
      heap.pop_back();
      if (best < kInf && cost > best + kTieTolerance) break;
      if (!SegmentClear(nodes[u], nodes[v], clipped)) continue;
      if (best == kInf) best = cost;
      if (pick == n || PreferPredecessor(nodes[u], nodes[pick])) pick = u;
    }
    dist[v] = best;
    parent[v] = pick;
  }
  if (dist[g] == kInf) {
    throw Error(ErrorCode::kNoPath, "goal unreachable by a monotone path");
  }
  Search2DResult result;
  result.path = Backtrack(nodes, parent, s, g);
  result.length = PolylineLength(result.path);
  result.num_rects = rects.size();
  result.num_nodes = n;
  return result;
}

}  // namespace coordplan
