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

// Scenario files: a JSON document (schema version 1) describing paths,
// vehicles, conflict regions and planner/controller settings. See README.md
// for the field reference.

#ifndef COORDPLAN_SCENARIO_H_
#define COORDPLAN_SCENARIO_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "coordplan/conflict.h"
#include "coordplan/geometry.h"
#include "coordplan/planner.h"
#include "coordplan/simulation.h"
#include "json.hpp"

namespace coordplan {

inline constexpr int kScenarioVersion = 1;

struct NamedPath {
  std::string id;
  std::vector<Point2> vertices;
  friend bool operator==(const NamedPath&, const NamedPath&) = default;
};

struct VehicleSpec {
  std::string id;
  std::string path;
  friend bool operator==(const VehicleSpec&, const VehicleSpec&) = default;
};

// Radius for the index-th crossing between two vehicles, counted along the
// path of the one that appears earlier in Scenario::vehicles.
struct OverrideSpec {
  std::string first;
  std::string second;
  int index = 0;
  double radius = 0.0;
  friend bool operator==(const OverrideSpec&, const OverrideSpec&) = default;
};

struct SamePathSpec {
  std::vector<std::string> vehicles;
  double spacing = 0.0;
  double radius = 0.0;
  friend bool operator==(const SamePathSpec&, const SamePathSpec&) = default;
};

struct Scenario {
  int version = kScenarioVersion;
  std::vector<NamedPath> paths;
  std::vector<VehicleSpec> vehicles;  // vehicle index = position here
  double radius = 10.0;
  std::vector<OverrideSpec> overrides;
  std::vector<SamePathSpec> same_path;
  Strategy strategy = Strategy::kIncremental;
  Budget budget;
  std::uint64_t seed = 0;
  SimConfig control;

  int VehicleIndex(std::string_view id) const;  // -1 if unknown
  const NamedPath* FindPath(std::string_view id) const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

// Throws Error(kParseError) for malformed JSON, Error(kSchemaError) naming
// the offending field for unknown fields or wrong types, and
// Error(kValidationError) for dangling references and bad values.
Scenario ParseScenario(std::string_view text);
Scenario LoadScenario(const std::filesystem::path& file);

// Every field, defaults included, in a fixed order.
nlohmann::ordered_json ScenarioToJson(const Scenario& scenario);
std::string WriteScenario(const Scenario& scenario);

// Geometry and conflicts derived from a scenario.
struct ScenarioModel {
  std::vector<PolylinePath> vehicle_paths;  // indexed by vehicle
  ConflictSet conflicts;
  PlanningProblem problem;
};

ScenarioModel BuildModel(const Scenario& scenario);

}  // namespace coordplan

#endif  // COORDPLAN_SCENARIO_H_
