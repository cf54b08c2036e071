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

#include "coordplan/geometry.h"

#include <algorithm>
#include <string>

#include "coordplan/error.h"

namespace coordplan {
namespace {

enum class ContactKind { kNone, kPoint, kOverlap };

struct Contact {
  ContactKind kind = ContactKind::kNone;
  double t = 0.0;  // Fraction along the first segment.
  double u = 0.0;  // Fraction along the second segment.
};

// Contact between closed segments p0p1 and q0q1 with kGeometryTolerance
// snapping. Collinear overlap of positive length is kOverlap; a collinear
// touch at a single point is reported as kPoint.
Contact SegmentContact(Point2 p0, Point2 p1, Point2 q0, Point2 q1) {
  const Point2 d1 = p1 - p0;
  const Point2 d2 = q1 - q0;
  const double len1 = Norm(d1);
  const double len2 = Norm(d2);
  const double denom = Cross(d1, d2);
  const Point2 w = q0 - p0;
  const double tol = kGeometryTolerance;

  if (std::abs(denom) <= 1e-12 * len1 * len2) {
    // Parallel. Collinear if q0 lies on the supporting line of p.
    if (std::abs(Cross(w, d1)) > tol * len1) return {};
    const double a = Dot(w, d1) / len1;
    const double b = Dot(q1 - p0, d1) / len1;
    const double lo = std::max(0.0, std::min(a, b));
    const double hi = std::min(len1, std::max(a, b));
    if (hi < lo - tol) return {};
    if (hi - lo > tol) return {ContactKind::kOverlap, lo / len1, 0.0};
    const double mid = std::clamp(0.5 * (lo + hi), 0.0, len1);
    const Point2 p = p0 + (mid / len1) * d1;
    const double u = std::clamp(Dot(p - q0, d2) / (len2 * len2), 0.0, 1.0);
    return {ContactKind::kPoint, mid / len1, u};
  }

  const double t = Cross(w, d2) / denom;
  const double u = Cross(w, d1) / denom;
  const double t_slack = tol / len1;
  const double u_slack = tol / len2;
  if (t < -t_slack || t > 1.0 + t_slack || u < -u_slack || u > 1.0 + u_slack) {
    return {};
  }
  return {ContactKind::kPoint, std::clamp(t, 0.0, 1.0), std::clamp(u, 0.0, 1.0)};
}

}  // namespace

PolylinePath PolylinePath::Build(std::vector<Point2> vertices) {
  if (vertices.size() < 2) {
    throw Error(ErrorCode::kDegeneratePath,
                "a path needs at least two vertices");
  }
  std::vector<double> cum(vertices.size(), 0.0);
  for (std::size_t k = 1; k < vertices.size(); ++k) {
    if (!std::isfinite(vertices[k].x) || !std::isfinite(vertices[k].y)) {
      throw Error(ErrorCode::kDegeneratePath, "non-finite vertex");
    }
    const double len = Distance(vertices[k - 1], vertices[k]);
    if (len <= kGeometryTolerance) {
      throw Error(ErrorCode::kDegeneratePath,
                  "duplicate consecutive vertex at index " + std::to_string(k));
    }
    cum[k] = cum[k - 1] + len;
  }

  const std::size_t n = vertices.size() - 1;
  const bool closed = Distance(vertices.front(), vertices.back()) <=
                      kGeometryTolerance;
  for (std::size_t k = 0; k < n; ++k) {
    // Adjacent segments may only share their common vertex; a fold-back
    // overlaps collinearly.
    if (k + 1 < n) {
      const Point2 d1 = vertices[k + 1] - vertices[k];
      const Point2 d2 = vertices[k + 2] - vertices[k + 1];
      if (std::abs(Cross(d1, d2)) <= 1e-12 * Norm(d1) * Norm(d2) &&
          Dot(d1, d2) < 0.0) {
        throw Error(ErrorCode::kSelfIntersecting,
                    "segments " + std::to_string(k) + " and " +
                        std::to_string(k + 1) + " fold back");
      }
    }
    for (std::size_t m = k + 2; m < n; ++m) {
      const Contact c = SegmentContact(vertices[k], vertices[k + 1],
                                       vertices[m], vertices[m + 1]);
      if (c.kind == ContactKind::kNone) continue;
      if (closed && k == 0 && m == n - 1 && c.kind == ContactKind::kPoint &&
          c.t * Distance(vertices[0], vertices[1]) <= kGeometryTolerance) {
        continue;
      }
      throw Error(ErrorCode::kSelfIntersecting,
                  "segments " + std::to_string(k) + " and " +
                      std::to_string(m) + " intersect");
    }
  }
  return PolylinePath(std::move(vertices), std::move(cum));
}

double PolylinePath::Clamp(double s) const {
  if (s < -kGeometryTolerance || s > length() + kGeometryTolerance ||
      std::isnan(s)) {
    throw Error(ErrorCode::kOutOfRange,
                "arc length " + std::to_string(s) + " outside [0, " +
                    std::to_string(length()) + "]");
  }
  return std::clamp(s, 0.0, length());
}

std::size_t PolylinePath::SegmentIndex(double s) const {
  // First breakpoint >= s closes the containing (incoming) segment.
  auto it = std::lower_bound(cum_length_.begin() + 1, cum_length_.end(), s);
  if (it == cum_length_.end()) return num_segments() - 1;
  return static_cast<std::size_t>(it - cum_length_.begin()) - 1;
}

Point2 PolylinePath::PointAt(double s) const {
  s = Clamp(s);
  if (s == 0.0) return vertices_.front();
  if (s == length()) return vertices_.back();
  const std::size_t k = SegmentIndex(s);
  const double seg = cum_length_[k + 1] - cum_length_[k];
  const double t = (s - cum_length_[k]) / seg;
  return vertices_[k] + t * (vertices_[k + 1] - vertices_[k]);
}

Point2 PolylinePath::TangentAt(double s) const {
  s = Clamp(s);
  const std::size_t k = SegmentIndex(s);
  const Point2 d = vertices_[k + 1] - vertices_[k];
  return (1.0 / Norm(d)) * d;
}

PathIntersections SegmentIntersections(const PolylinePath& a,
                                       const PolylinePath& b) {
  PathIntersections out;
  const auto& va = a.vertices();
  const auto& vb = b.vertices();
  const auto& ca = a.cumulative_length();
  const auto& cb = b.cumulative_length();
  for (std::size_t k = 0; k < a.num_segments(); ++k) {
    for (std::size_t m = 0; m < b.num_segments(); ++m) {
      const Contact c = SegmentContact(va[k], va[k + 1], vb[m], vb[m + 1]);
      if (c.kind == ContactKind::kNone) continue;
      if (c.kind == ContactKind::kOverlap) {
        out.shared_geometry = true;
        continue;
      }
      PathCrossing x;
      x.s_a = ca[k] + c.t * (ca[k + 1] - ca[k]);
      x.s_b = cb[m] + c.u * (cb[m + 1] - cb[m]);
      x.point = va[k] + c.t * (va[k + 1] - va[k]);
      out.crossings.push_back(x);
    }
  }
  if (out.shared_geometry) {
    out.crossings.clear();
    return out;
  }
  std::sort(out.crossings.begin(), out.crossings.end(),
            [](const PathCrossing& l, const PathCrossing& r) {
              if (l.s_a != r.s_a) return l.s_a < r.s_a;
              return l.s_b < r.s_b;
            });
  // A crossing through a shared vertex is found once per adjacent segment.
  std::vector<PathCrossing> unique;
  for (const PathCrossing& x : out.crossings) {
    const bool dup = std::any_of(
        unique.begin(), unique.end(), [&](const PathCrossing& u) {
          return std::abs(u.s_a - x.s_a) <= 1e-7 &&
                 std::abs(u.s_b - x.s_b) <= 1e-7;
        });
    if (!dup) unique.push_back(x);
  }
  out.crossings = std::move(unique);
  return out;
}

}  // namespace coordplan
