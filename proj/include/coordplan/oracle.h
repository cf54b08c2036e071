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

// Brute-force lattice search over the full joint configuration space. Only
// practical for up to three vehicles; used to judge the decomposition
// planners.

#ifndef COORDPLAN_ORACLE_H_
#define COORDPLAN_ORACLE_H_

#include <cstddef>
#include <vector>

#include "coordplan/conflict.h"
#include "coordplan/trajectory.h"

namespace coordplan {

struct GridSpec {
  // Target lattice spacing. Each axis uses s / ceil(s / resolution) so the
  // goal is a lattice point.
  double resolution = 0.1;
  // Moves are the nonzero primitive integer vectors with entries in
  // [0, max_step]. 1 gives the classic unit-step lattice; larger values add
  // more directions and shrink the lattice-metric bias.
  int max_step = 1;
};

struct GridResult {
  Trajectory trajectory;  // axes 0..N-1
  double length = 0.0;
  std::size_t lattice_points = 0;
  std::size_t expanded = 0;
};

// A* from the origin to path_lengths with a Euclidean heuristic. A lattice
// point is blocked if its projection lies inside a conflict rectangle; an
// edge is usable if its projection clears every rectangle. Throws
// Error(kTooLarge) for more than 3 vehicles or too many lattice points,
// Error(kNoPath) if the goal is unreachable.
GridResult GridPlan(const std::vector<double>& path_lengths,
                    const ConflictSet& conflicts, const GridSpec& spec);

// planner_length / oracle_length.
double Gap(double planner_length, double oracle_length);

}  // namespace coordplan

#endif  // COORDPLAN_ORACLE_H_
