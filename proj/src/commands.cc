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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "coordplan/feasibility.h"
#include "coordplan/oracle.h"
#include "coordplan/planner.h"
#include "coordplan/profile.h"
#include "coordplan/scenario.h"
#include "coordplan/simulation.h"

namespace coordplan {
namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

struct Loaded {
  Scenario scenario;
  ScenarioModel model;
};

Loaded Load(const CommandOptions& o) {
  Loaded l{LoadScenario(o.scenario), {}};
  Scenario& s = l.scenario;
  try {
    if (o.strategy) s.strategy = ParseStrategy(*o.strategy);
    if (o.budget) s.budget = Budget::Parse(*o.budget);
  } catch (const Error& e) {
    throw Error(ErrorCode::kValidationError, e.what());
  }
  if (o.seed) s.seed = *o.seed;
  l.model = BuildModel(s);
  return l;
}

void WriteText(const fs::path& file, const std::string& text) {
  if (file.has_parent_path()) fs::create_directories(file.parent_path());
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot write '" + file.string() + "'");
  }
}

void WriteJson(const fs::path& file, const Json& j) {
  WriteText(file, j.dump(2) + "\n");
}

std::string FileSafe(const std::string& id) {
  std::string out = id;
  for (char& c : out) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '-' || c == '_';
    if (!ok) c = '_';
  }
  return out;
}

Order ParseOrder(const Scenario& s, const std::string& text) {
  Order order;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    const std::string id = b == std::string::npos ? "" : item.substr(b, e - b + 1);
    const int v = s.VehicleIndex(id);
    if (v < 0) {
      throw Error(ErrorCode::kValidationError,
                  "order names unknown vehicle '" + id + "'");
    }
    order.push_back(v);
  }
  return order;
}

Json OrderIds(const Scenario& s, const Order& order) {
  Json out = Json::array();
  for (int v : order) out.push_back(s.vehicles[v].id);
  return out;
}

Json AxisIds(const Scenario& s, const std::vector<int>& axes) {
  return OrderIds(s, axes);
}

Json ConflictsJson(const Scenario& s, const ConflictSet& cs) {
  Json out = Json::array();
  for (const ConflictRect& r : cs.rects()) {
    Json e;
    e["vehicles"] = Json::array({s.vehicles[r.i].id, s.vehicles[r.j].id});
    e["index"] = r.k;
    e["interval_first"] = Json::array({r.lo_i, r.hi_i});
    e["interval_second"] = Json::array({r.lo_j, r.hi_j});
    e["center"] = Json::array({r.center.x, r.center.y});
    e["radius"] = r.radius;
    e["same_path"] = r.same_path;
    out.push_back(std::move(e));
  }
  return out;
}

Json FeasibilityJson(const Scenario& s, const FeasibilityReport& rep) {
  Json j;
  j["violations"] = rep.violations.size();
  j["summary"] = std::to_string(rep.violations.size()) + " violations";
  j["segments_checked"] = rep.segments_checked;
  j["rects_checked"] = rep.rects_checked;
  Json details = Json::array();
  for (const Violation& v : rep.violations) {
    Json e;
    e["kind"] = std::string(ViolationKindName(v.kind));
    e["segment"] = v.segment;
    if (v.kind == Violation::Kind::kConflict) e["rect"] = v.rect;
    if (v.vehicle >= 0) e["vehicle"] = s.vehicles[v.vehicle].id;
    e["detail"] = v.detail;
    details.push_back(std::move(e));
  }
  j["details"] = std::move(details);
  return j;
}

std::string TrajectoryCsv(const Scenario& s, const Trajectory& traj) {
  std::string out = "ell";
  for (int a : traj.axes()) out += "," + s.vehicles[a].id;
  out += "\n";
  for (std::size_t k = 0; k < traj.waypoints().size(); ++k) {
    out += FormatDouble(traj.breakpoints()[k]);
    for (double c : traj.waypoints()[k]) out += "," + FormatDouble(c);
    out += "\n";
  }
  return out;
}

// One row per waypoint: time, arc lengths, then speeds on the segment that
// starts there (zero on the last row).
std::string ScheduleCsv(const Scenario& s, const Schedule& sched) {
  std::string out = "t";
  for (int a : sched.axes) out += ",s_" + s.vehicles[a].id;
  for (int a : sched.axes) out += ",v_" + s.vehicles[a].id;
  out += "\n";
  for (std::size_t k = 0; k < sched.times.size(); ++k) {
    out += FormatDouble(sched.times[k]);
    for (double p : sched.positions[k]) out += "," + FormatDouble(p);
    for (std::size_t a = 0; a < sched.axes.size(); ++a) {
      const double v = k < sched.speeds.size() ? sched.speeds[k][a] : 0.0;
      out += "," + FormatDouble(v);
    }
    out += "\n";
  }
  return out;
}

Trajectory ReadPlanTrajectory(const Loaded& l, const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kParseError,
                "cannot read plan file '" + file.string() + "'");
  }
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  try {
    const Json& t = j.at("trajectory");
    std::vector<int> axes;
    for (const Json& id : t.at("axes")) {
      const int v = l.scenario.VehicleIndex(id.get<std::string>());
      if (v < 0) {
        throw Error(ErrorCode::kValidationError,
                    "plan names unknown vehicle " + id.dump());
      }
      axes.push_back(v);
    }
    std::vector<std::vector<double>> pts;
    for (const Json& w : t.at("waypoints")) {
      pts.push_back(w.get<std::vector<double>>());
    }
    return Trajectory(std::move(axes), std::move(pts)).Canonical();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kSchemaError,
                std::string("plan file: ") + e.what());
  }
}

double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNoPath:
    case ErrorCode::kNoFeasibleOrder:
      return kExitInfeasible;
    case ErrorCode::kTooLarge:
      return kExitTooLarge;
    default:
      return kExitInputError;
  }
}

std::string FormatDouble(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, r.ptr);
}

Json CmdPlan(const CommandOptions& o) {
  const Loaded l = Load(o);
  const Scenario& s = l.scenario;
  const PlanningProblem& problem = l.model.problem;

  PlanResult plan = [&] {
    if (o.order) return PlanOrder(problem, s.strategy, ParseOrder(s, *o.order));
    return FindBestPlan(problem, s.strategy, s.budget, s.seed).plan;
  }();
  const FeasibilityReport rep =
      ValidateFeasibility(plan.trajectory, l.model.conflicts,
                          problem.path_lengths);
  const VelocityProfile profile = UnitVelocityProfile(plan.trajectory);
  const Schedule sched = ReferenceSchedule(profile, s.control.nmpc.v_max);

  Json j;
  j["scenario"] = ScenarioToJson(s);
  j["strategy"] = std::string(StrategyName(s.strategy));
  j["order"] = OrderIds(s, plan.order);
  j["length"] = plan.length();
  j["lower_bound"] = problem.LowerBound();
  j["path_lengths"] = problem.path_lengths;
  j["conflicts"] = ConflictsJson(s, l.model.conflicts);
  j["warnings"] = l.model.conflicts.warnings();
  Json traj;
  traj["axes"] = AxisIds(s, plan.trajectory.axes());
  traj["waypoints"] = plan.trajectory.waypoints();
  j["trajectory"] = std::move(traj);
  Json prof;
  prof["directions"] = profile.directions;
  prof["lengths"] = profile.lengths;
  j["profile"] = std::move(prof);
  Json sj;
  sj["v_max"] = s.control.nmpc.v_max;
  sj["makespan"] = sched.makespan();
  sj["times"] = sched.times;
  sj["speeds"] = sched.speeds;
  j["schedule"] = std::move(sj);
  Json subs = Json::array();
  for (const SubproblemStats& st : plan.subproblems) {
    subs.push_back({{"rects", st.num_rects}, {"nodes", st.num_nodes}});
  }
  j["subproblems"] = std::move(subs);
  j["feasibility"] = FeasibilityJson(s, rep);

  WriteJson(o.out_dir / "plan.json", j);
  WriteText(o.out_dir / "trajectory.csv", TrajectoryCsv(s, plan.trajectory));
  WriteText(o.out_dir / "schedule.csv", ScheduleCsv(s, sched));

  Json summary;
  summary["order"] = j["order"];
  summary["length"] = plan.length();
  summary["lower_bound"] = problem.LowerBound();
  summary["makespan"] = sched.makespan();
  summary["feasibility"] = j["feasibility"]["summary"];
  summary["exit_code"] = rep.ok() ? kExitOk : kExitInfeasible;
  return summary;
}

Json CmdSweep(const CommandOptions& o) {
  const Loaded l = Load(o);
  const Scenario& s = l.scenario;
  const BestPlan best =
      FindBestPlan(l.model.problem, s.strategy, s.budget, s.seed);

  std::vector<double> ok;
  Json rows = Json::array();
  for (const OrderOutcome& out : best.stats.outcomes) {
    Json e;
    e["order"] = OrderIds(s, out.order);
    if (out.length) {
      e["length"] = *out.length;
      ok.push_back(*out.length);
    } else {
      e["length"] = nullptr;
    }
    rows.push_back(std::move(e));
  }
  Json j;
  j["strategy"] = std::string(StrategyName(s.strategy));
  j["budget"] = s.budget.ToString();
  j["seed"] = s.seed;
  j["canonical_orders"] = CanonicalOrderCount(s.strategy, l.model.problem.num_vehicles());
  j["evaluated"] = best.stats.evaluated();
  j["failed"] = best.stats.evaluated() - ok.size();
  j["best_order"] = OrderIds(s, best.plan.order);
  j["best_length"] = best.plan.length();
  j["lower_bound"] = l.model.problem.LowerBound();
  Json dist;
  dist["min"] = *std::min_element(ok.begin(), ok.end());
  dist["mean"] = std::accumulate(ok.begin(), ok.end(), 0.0) /
                 static_cast<double>(ok.size());
  dist["median"] = Median(ok);
  dist["max"] = *std::max_element(ok.begin(), ok.end());
  j["distribution"] = std::move(dist);
  j["orders"] = std::move(rows);
  WriteJson(o.out_dir / "sweep.json", j);

  Json timing;
  timing["wall_seconds"] = best.stats.wall_seconds;
  timing["evaluated"] = best.stats.evaluated();
  WriteJson(o.out_dir / "sweep_timing.json", timing);

  Json summary;
  summary["evaluated"] = j["evaluated"];
  summary["best_order"] = j["best_order"];
  summary["best_length"] = j["best_length"];
  summary["wall_seconds"] = best.stats.wall_seconds;
  summary["exit_code"] = kExitOk;
  return summary;
}

Json CmdSimulate(const CommandOptions& o) {
  const Loaded l = Load(o);
  const Scenario& s = l.scenario;
  const Trajectory traj = ReadPlanTrajectory(l, o.plan);
  const FeasibilityReport rep =
      ValidateFeasibility(traj, l.model.conflicts, l.model.problem.path_lengths);
  if (!rep.ok()) {
    throw Error(ErrorCode::kValidationError,
                "plan does not match the scenario: " +
                    std::to_string(rep.violations.size()) + " violations");
  }
  const Schedule sched =
      ReferenceSchedule(UnitVelocityProfile(traj), s.control.nmpc.v_max);
  const SimLog log = Simulate(l.model.vehicle_paths, sched, l.model.conflicts,
                              s.control);

  const VehicleParams& p = s.control.params;
  bool inputs_ok = true;
  bool steering_ok = true;
  for (std::size_t v = 0; v < log.records.size(); ++v) {
    std::string csv = "t,x,y,psi,v,delta,a,delta_rate,s_ref,v_ref\n";
    for (const SimRecord& r : log.records[v]) {
      inputs_ok = inputs_ok && r.input.a >= p.a_min && r.input.a <= p.a_max &&
                  r.input.delta_rate >= p.delta_rate_min &&
                  r.input.delta_rate <= p.delta_rate_max;
      steering_ok = steering_ok && r.state.delta >= p.delta_min &&
                    r.state.delta <= p.delta_max;
      const double row[] = {r.t,       r.state.x,     r.state.y,
                            r.state.psi, r.state.v,   r.state.delta,
                            r.input.a, r.input.delta_rate, r.s_ref,
                            r.v_ref};
      for (std::size_t c = 0; c < std::size(row); ++c) {
        if (c > 0) csv += ",";
        csv += FormatDouble(row[c]);
      }
      csv += "\n";
    }
    WriteText(o.out_dir / ("sim_" + FileSafe(s.vehicles[v].id) + ".csv"), csv);
  }

  Json j;
  j["dt"] = log.dt;
  j["steps"] = log.steps;
  j["makespan"] = sched.makespan();
  j["completed"] = log.completed;
  j["occupancy_radius_scale"] = s.control.occupancy_radius_scale;
  j["conflict_violations"] = log.violations.size();
  Json events = Json::array();
  for (const OccupancyEvent& e : log.violations) {
    events.push_back({{"t", e.t},
                      {"vehicles", Json::array({s.vehicles[e.i].id,
                                                s.vehicles[e.j].id})},
                      {"rect", e.rect}});
  }
  j["violation_events"] = std::move(events);
  j["full_radius_overlaps"] = log.full_radius_overlaps;
  j["inputs_within_bounds"] = inputs_ok;
  j["steering_within_bounds"] = steering_ok;
  Json pairs = Json::array();
  for (const PairDistance& pd : log.pair_distances) {
    pairs.push_back({{"vehicles", Json::array({s.vehicles[pd.i].id,
                                               s.vehicles[pd.j].id})},
                     {"min_distance", pd.min_distance},
                     {"t", pd.t}});
  }
  j["pair_min_distance"] = std::move(pairs);
  Json err = Json::array();
  for (std::size_t v = 0; v < log.records.size(); ++v) {
    err.push_back({{"vehicle", s.vehicles[v].id},
                   {"max_position_error", log.max_position_error[v]},
                   {"max_speed_error", log.max_speed_error[v]}});
  }
  j["tracking"] = std::move(err);
  j["unconverged_solves"] = log.unconverged_solves;
  j["stalled_solves"] = log.stalled_solves;
  WriteJson(o.out_dir / "sim_summary.json", j);

  Json summary;
  summary["steps"] = log.steps;
  summary["completed"] = log.completed;
  summary["conflict_violations"] = log.violations.size();
  summary["exit_code"] = log.violations.empty() ? kExitOk : kExitInfeasible;
  return summary;
}

Json CmdOracle(const CommandOptions& o) {
  const Loaded l = Load(o);
  const Scenario& s = l.scenario;
  const PlanningProblem& problem = l.model.problem;
  const int n = problem.num_vehicles();
  if (n > 3) {
    throw Error(ErrorCode::kTooLarge,
                "the grid oracle handles at most 3 vehicles (scenario has " +
                    std::to_string(n) +
                    "); compare larger scenarios with the sweep command");
  }
  GridSpec spec{o.resolution, o.max_step > 0 ? o.max_step : (n <= 2 ? 8 : 2)};
  const BestPlan best =
      FindBestPlan(problem, s.strategy, Budget::All(), s.seed);
  const GridResult grid = GridPlan(problem.path_lengths, l.model.conflicts, spec);
  const double lb = problem.LowerBound();

  Json j;
  j["resolution"] = spec.resolution;
  j["max_step"] = spec.max_step;
  j["strategy"] = std::string(StrategyName(s.strategy));
  j["planner_order"] = OrderIds(s, best.plan.order);
  j["planner_length"] = best.plan.length();
  j["oracle_length"] = grid.length;
  j["lower_bound"] = lb;
  j["gap"] = Gap(best.plan.length(), grid.length);
  j["planner_over_lower_bound"] = lb > 0.0 ? best.plan.length() / lb : 1.0;
  j["oracle_over_lower_bound"] = lb > 0.0 ? grid.length / lb : 1.0;
  double diag = 0.0;
  for (double len : problem.path_lengths) {
    const double h = len / std::max(1.0, std::ceil(len / spec.resolution - 1e-9));
    diag += h * h;
  }
  j["cell_diagonal"] = std::sqrt(diag);
  j["lattice_points"] = grid.lattice_points;
  j["expanded"] = grid.expanded;
  j["oracle_feasibility"] = FeasibilityJson(
      s, ValidateFeasibility(grid.trajectory, l.model.conflicts,
                             problem.path_lengths))["summary"];
  WriteJson(o.out_dir / "oracle.json", j);
  j["exit_code"] = kExitOk;
  return j;
}

Json CmdValidate(const CommandOptions& o) {
  const Loaded l = Load(o);
  const Scenario& s = l.scenario;
  Json j;
  j["vehicles"] = s.vehicles.size();
  j["conflicts"] = l.model.conflicts.size();
  j["warnings"] = l.model.conflicts.warnings();
  j["lower_bound"] = l.model.problem.LowerBound();
  int code = kExitOk;
  if (!o.plan.empty()) {
    const Trajectory traj = ReadPlanTrajectory(l, o.plan);
    const FeasibilityReport rep = ValidateFeasibility(
        traj, l.model.conflicts, l.model.problem.path_lengths);
    j["plan_length"] = traj.length();
    j["feasibility"] = FeasibilityJson(s, rep);
    if (!rep.ok()) code = kExitInfeasible;
  }
  j["exit_code"] = code;
  return j;
}

}  // namespace coordplan
