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

// The command-line verbs as library functions. Each writes its artifacts to
// out_dir and returns a short JSON summary. Errors are thrown as
// coordplan::Error; ExitCodeFor maps them to process exit codes.

#ifndef COORDPLAN_COMMANDS_H_
#define COORDPLAN_COMMANDS_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "coordplan/error.h"
#include "json.hpp"

namespace coordplan {

struct CommandOptions {
  std::filesystem::path scenario;
  std::filesystem::path out_dir = ".";
  // Overrides of the scenario's planner section.
  std::optional<std::string> strategy;
  std::optional<std::string> budget;
  std::optional<std::uint64_t> seed;
  // Comma-separated vehicle ids; plans this single order instead of sweeping.
  std::optional<std::string> order;
  // Plan artifact for simulate / validate.
  std::filesystem::path plan;
  // Oracle lattice.
  double resolution = 0.1;
  int max_step = 0;  // 0 picks 8 for up to two vehicles, 2 for three
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitInputError = 3;
inline constexpr int kExitTooLarge = 4;

int ExitCodeFor(ErrorCode code);

// plan.json, trajectory.csv, schedule.csv. The summary's "exit_code" is
// kExitInfeasible if the feasibility check found violations.
nlohmann::ordered_json CmdPlan(const CommandOptions& options);
// sweep.json (deterministic for count and all budgets) and sweep_timing.json.
nlohmann::ordered_json CmdSweep(const CommandOptions& options);
// sim_<vehicle>.csv per vehicle and sim_summary.json.
nlohmann::ordered_json CmdSimulate(const CommandOptions& options);
// oracle.json.
nlohmann::ordered_json CmdOracle(const CommandOptions& options);
// Checks the scenario and, if options.plan is set, the plan's feasibility.
// Writes nothing.
nlohmann::ordered_json CmdValidate(const CommandOptions& options);

// Shortest decimal form that reads back to the same double; independent of
// the C locale.
std::string FormatDouble(double v);

}  // namespace coordplan

#endif  // COORDPLAN_COMMANDS_H_
