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

#ifndef COORDPLAN_GEOMETRY_H_
#define COORDPLAN_GEOMETRY_H_

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace coordplan {

// Snapping tolerance for all planar geometry tests, in meters.
inline constexpr double kGeometryTolerance = 1e-9;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Point2 a, Point2 b) = default;
};

inline double Dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double Cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double Norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double Distance(Point2 a, Point2 b) { return Norm(a - b); }

// A planar polyline parameterized by arc length s in [0, length()].
// Immutable once built; construction validates that consecutive vertices are
// distinct and that no two non-adjacent segments touch.
class PolylinePath {
 public:
  // Throws Error(kDegeneratePath) or Error(kSelfIntersecting).
  static PolylinePath Build(std::vector<Point2> vertices);

  const std::vector<Point2>& vertices() const { return vertices_; }
  const std::vector<double>& cumulative_length() const { return cum_length_; }
  double length() const { return cum_length_.back(); }
  std::size_t num_segments() const { return vertices_.size() - 1; }

  // Index of the segment containing s. At an interior breakpoint the incoming
  // segment is returned. s must already be inside [0, length()].
  std::size_t SegmentIndex(double s) const;

  // Throws Error(kOutOfRange) if s is outside [0, length()] by more than
  // kGeometryTolerance; values within the slack are clamped.
  Point2 PointAt(double s) const;

  // Unit tangent of the segment containing s (incoming segment at a
  // breakpoint, first segment at s = 0).
  Point2 TangentAt(double s) const;

 private:
  PolylinePath(std::vector<Point2> vertices, std::vector<double> cum_length)
      : vertices_(std::move(vertices)), cum_length_(std::move(cum_length)) {}

  double Clamp(double s) const;

  std::vector<Point2> vertices_;
  std::vector<double> cum_length_;
};

// One transversal crossing between two paths.
struct PathCrossing {
  double s_a = 0.0;
  double s_b = 0.0;
  Point2 point;
};

struct PathIntersections {
  // Sorted by s_a, one entry per physical crossing.
  std::vector<PathCrossing> crossings;
  // True if the two paths overlap collinearly over a positive length. Such
  // overlap is never reported through `crossings`.
  bool shared_geometry = false;
};

PathIntersections SegmentIntersections(const PolylinePath& a,
                                       const PolylinePath& b);

}  // namespace coordplan

#endif  // COORDPLAN_GEOMETRY_H_
