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

// Exact feasibility check of a joint trajectory against a conflict set.

#ifndef COORDPLAN_FEASIBILITY_H_
#define COORDPLAN_FEASIBILITY_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "coordplan/conflict.h"
#include "coordplan/trajectory.h"

namespace coordplan {

struct Violation {
  enum class Kind { kConflict, kNonMonotone, kBadStart, kBadGoal, kMissingAxis };
  Kind kind = Kind::kConflict;
  std::size_t segment = 0;  // trajectory segment (waypoint index for ends)
  std::size_t rect = 0;     // index into ConflictSet::rects() for kConflict
  int vehicle = -1;         // offending vehicle where one applies
  std::string detail;
};

std::string_view ViolationKindName(Violation::Kind kind);

struct FeasibilityReport {
  std::vector<Violation> violations;
  std::size_t segments_checked = 0;
  std::size_t rects_checked = 0;

  bool ok() const { return violations.empty(); }
};

// Projects every segment onto the plane of every conflict rectangle and
// clips it against the open rectangle (boundary slack kGeometryTolerance).
// Also checks that no component decreases by more than 1e-12, that the
// trajectory starts at the origin and ends at path_lengths, and that it
// covers every vehicle.
FeasibilityReport ValidateFeasibility(const Trajectory& traj,
                                      const ConflictSet& conflicts,
                                      const std::vector<double>& path_lengths);

}  // namespace coordplan

#endif  // COORDPLAN_FEASIBILITY_H_
