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

// Scenario fixtures, a random scenario generator, and reference
// implementations that the library code is checked against. Nothing here
// calls the library routine it is meant to check.

#ifndef COORDPLAN_TESTS_SUPPORT_TEST_SUPPORT_H_
#define COORDPLAN_TESTS_SUPPORT_TEST_SUPPORT_H_

#include <cstdint>
#include <random>
#include <vector>

#include "coordplan/conflict.h"
#include "coordplan/geometry.h"
#include "coordplan/planner.h"
#include "coordplan/search2d.h"

namespace coordplan::testing {

struct Fixture {
  std::vector<PolylinePath> paths;
  ConflictConfig config;
  ConflictSet conflicts;
  PlanningProblem problem;
};

Fixture MakeFixture(std::vector<PolylinePath> paths, ConflictConfig config);

// Two straight 60 m paths crossing at right angles at their midpoints.
Fixture PerpendicularCrossing(double radius = 10.0);

// Three vehicles, four crossings: vehicle 1 and vehicle 2 cross twice,
// vehicle 0 crosses each of the others once. The straight-line joint motion
// puts vehicles 1 and 2 inside one shared conflict disc at the same time.
Fixture ThreeVehicleDoubleCrossing();

struct RandomScenarioOptions {
  int min_vehicles = 2;
  int max_vehicles = 6;
  std::size_t max_rects = 15;
  double same_path_probability = 0.3;
  double box_size = 100.0;
  double min_radius = 2.0;
  double max_radius = 5.0;
};

// Random bent paths across a box_size square, random disc radii, optionally one
// pair of vehicles sharing a path with a chain of same-path discs. Draws are
// repeated until the conflict set is valid and small enough.
Fixture RandomScenario(std::mt19937_64& rng,
                       const RandomScenarioOptions& options);

// Random axis-aligned rectangles inside [0, size]^2 that keep both corners
// of the box free.
std::vector<Rect> RandomRects(std::mt19937_64& rng, int count, double size,
                              double min_side, double max_side);

// Arc-length interval inside the closed disc, found by marching outward from
// s_center in small steps and bisecting the boundary crossing.
Interval BisectDiscInterval(const PolylinePath& path, double s_center,
                            Point2 center, double radius);

// Number of distinct unordered coordination trees over all n! leaf orders,
// built pass by pass with string keys.
std::size_t CountPairwiseTreeClasses(int n);

// Number of distinct incremental plans over all n! orders: the first two
// vehicles are an unordered pair.
std::size_t CountIncrementalClasses(int n);

// Closed-form shortest monotone length around one rectangle in the box
// [0, gx] x [0, gy], or the straight line if unblocked. Only valid for one
// rectangle.
double SingleRectShortest(double gx, double gy, const Rect& r);

}  // namespace coordplan::testing

#endif  // COORDPLAN_TESTS_SUPPORT_TEST_SUPPORT_H_
