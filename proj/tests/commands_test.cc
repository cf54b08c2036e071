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

#include "coordplan/commands.h"

#include <unistd.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "coordplan/error.h"

namespace coordplan {
namespace {

namespace fs = std::filesystem;

const fs::path kScenarios = COORDPLAN_SCENARIO_DIR;

class CommandsTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("coordplan_commands_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  CommandOptions Options(const std::string& scenario) const {
    CommandOptions o;
    o.scenario = kScenarios / scenario;
    o.out_dir = dir_;
    return o;
  }

  fs::path WriteFile(const std::string& name, const std::string& text) const {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p;
  }

  static nlohmann::json ReadJson(const fs::path& p) {
    std::ifstream in(p);
    return nlohmann::json::parse(in);
  }

  fs::path dir_;
};

TEST_F(CommandsTest, PlanWritesArtifacts) {
  const auto summary = CmdPlan(Options("three_vehicle.json"));
  EXPECT_EQ(summary["exit_code"], kExitOk);
  EXPECT_EQ(summary["feasibility"], "0 violations");
  const auto plan = ReadJson(dir_ / "plan.json");
  EXPECT_GE(plan["length"].get<double>(),
            plan["lower_bound"].get<double>() - 1e-9);
  EXPECT_EQ(plan["conflicts"].size(), 4u);
  EXPECT_TRUE(fs::exists(dir_ / "trajectory.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "schedule.csv"));
}

TEST_F(CommandsTest, EmptyConflictSetPlanIsLowerBound) {
  const fs::path sc = WriteFile("parallel.json", R"({
    "version": 1,
    "paths": {"p": [[0, 0], [30, 0]], "q": [[0, 5], [40, 5]]},
    "vehicles": [{"id": "a", "path": "p"}, {"id": "b", "path": "q"}]
  })");
  CommandOptions o = Options("");
  o.scenario = sc;
  const auto summary = CmdPlan(o);
  EXPECT_NEAR(summary["length"].get<double>(), 50.0, 1e-9);
  EXPECT_EQ(summary["lower_bound"].get<double>(), 50.0);
}

TEST_F(CommandsTest, ExplicitOrder) {
  CommandOptions o = Options("three_vehicle.json");
  o.order = "v2,v3,v1";
  const auto summary = CmdPlan(o);
  EXPECT_EQ(summary["order"],
            nlohmann::ordered_json::parse(R"(["v2","v3","v1"])"));
  o.order = "v2,v3";
  try {
    CmdPlan(o);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(ExitCodeFor(e.code()), kExitInputError);
  }
}

TEST_F(CommandsTest, SweepExhaustiveThreeVehicles) {
  const auto summary = CmdSweep(Options("three_vehicle.json"));
  EXPECT_EQ(summary["evaluated"], 3);
  const auto sweep = ReadJson(dir_ / "sweep.json");
  EXPECT_EQ(sweep["orders"].size(), 3u);
  for (const auto& row : sweep["orders"]) {
    EXPECT_LE(sweep["best_length"].get<double>(), row["length"].get<double>());
  }
  EXPECT_EQ(sweep["distribution"]["min"], sweep["best_length"]);
}

TEST_F(CommandsTest, SweepTimeBudgetReportsCount) {
  CommandOptions o = Options("four_way.json");
  o.budget = "time:0.2";
  const auto summary = CmdSweep(o);
  EXPECT_GE(summary["evaluated"].get<int>(), 1);
  EXPECT_TRUE(ReadJson(dir_ / "sweep_timing.json").contains("wall_seconds"));
}

TEST_F(CommandsTest, SimulateCrossing) {
  CmdPlan(Options("crossing.json"));
  CommandOptions o = Options("crossing.json");
  o.plan = dir_ / "plan.json";
  const auto summary = CmdSimulate(o);
  EXPECT_EQ(summary["conflict_violations"], 0);
  EXPECT_EQ(summary["exit_code"], kExitOk);
  const auto sim = ReadJson(dir_ / "sim_summary.json");
  EXPECT_TRUE(sim["inputs_within_bounds"].get<bool>());
  EXPECT_TRUE(sim["steering_within_bounds"].get<bool>());
  std::ifstream csv(dir_ / "sim_car_a.csv");
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header, "t,x,y,psi,v,delta,a,delta_rate,s_ref,v_ref");
}

TEST_F(CommandsTest, SimulateRejectsForeignPlan) {
  CmdPlan(Options("crossing.json"));
  CommandOptions o = Options("three_vehicle.json");
  o.plan = dir_ / "plan.json";
  EXPECT_THROW(CmdSimulate(o), Error);
}

TEST_F(CommandsTest, OracleTwoVehicles) {
  CommandOptions o = Options("crossing.json");
  o.resolution = 0.5;
  const auto j = CmdOracle(o);
  const double planner = j["planner_length"];
  const double oracle = j["oracle_length"];
  EXPECT_GE(planner, j["lower_bound"].get<double>());
  EXPECT_LE(std::abs(planner - oracle), j["cell_diagonal"].get<double>());
}

TEST_F(CommandsTest, OracleRefusesFourVehicles) {
  try {
    CmdOracle(Options("four_way.json"));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(ExitCodeFor(e.code()), kExitTooLarge);
  }
}

TEST_F(CommandsTest, ValidatePlan) {
  CmdPlan(Options("platoon.json"));
  CommandOptions o = Options("platoon.json");
  o.plan = dir_ / "plan.json";
  const auto j = CmdValidate(o);
  EXPECT_EQ(j["exit_code"], kExitOk);
  EXPECT_EQ(j["feasibility"]["summary"], "0 violations");
}

TEST_F(CommandsTest, ExitCodes) {
  EXPECT_EQ(ExitCodeFor(ErrorCode::kNoPath), kExitInfeasible);
  EXPECT_EQ(ExitCodeFor(ErrorCode::kNoFeasibleOrder), kExitInfeasible);
  EXPECT_EQ(ExitCodeFor(ErrorCode::kTooLarge), kExitTooLarge);
  EXPECT_EQ(ExitCodeFor(ErrorCode::kSchemaError), kExitInputError);
  EXPECT_THROW(CmdPlan(Options("missing.json")), Error);
}

TEST(FormatDoubleTest, ShortestRoundTrip) {
  EXPECT_EQ(FormatDouble(0.1), "0.1");
  EXPECT_EQ(FormatDouble(3.0), "3");
  EXPECT_EQ(FormatDouble(-2.5e-7), "-2.5e-07");
}

}  // namespace
}  // namespace coordplan
