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

#include "coordplan/scenario.h"

#include <algorithm>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "coordplan/error.h"

namespace coordplan {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void SchemaFail(const std::string& field,
                             const std::string& reason) {
  throw Error(ErrorCode::kSchemaError, "field '" + field + "': " + reason);
}

[[noreturn]] void Invalid(const std::string& reason) {
  throw Error(ErrorCode::kValidationError, reason);
}

// Reads the members of one JSON object and rejects any it did not consume.
class Fields {
 public:
  Fields(const Json& j, std::string where) : j_(j), where_(std::move(where)) {
    if (!j_.is_object()) SchemaFail(Name(), "must be an object");
  }

  std::string Name(const std::string& key = "") const {
    if (key.empty()) return where_.empty() ? "<root>" : where_;
    return where_.empty() ? key : where_ + "." + key;
  }

  const Json* Get(const std::string& key) {
    used_.insert(key);
    const auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  const Json& Require(const std::string& key) {
    const Json* v = Get(key);
    if (v == nullptr) SchemaFail(Name(key), "required field missing");
    return *v;
  }

  void Number(const std::string& key, double& out) {
    if (const Json* v = Get(key)) out = AsNumber(*v, Name(key));
  }

  void Integer(const std::string& key, int& out) {
    if (const Json* v = Get(key)) {
      if (!v->is_number_integer()) SchemaFail(Name(key), "must be an integer");
      const auto x = v->get<std::int64_t>();
      if (x < std::numeric_limits<int>::min() ||
          x > std::numeric_limits<int>::max()) {
        SchemaFail(Name(key), "out of range");
      }
      out = static_cast<int>(x);
    }
  }

  void Unsigned(const std::string& key, std::uint64_t& out) {
    if (const Json* v = Get(key)) {
      if (!v->is_number_unsigned()) {
        SchemaFail(Name(key), "must be a nonnegative integer");
      }
      out = v->get<std::uint64_t>();
    }
  }

  void String(const std::string& key, std::string& out) {
    if (const Json* v = Get(key)) out = AsString(*v, Name(key));
  }

  void Finish() const {
    for (const auto& [key, value] : j_.items()) {
      if (!used_.count(key)) SchemaFail(Name(key), "unknown field");
    }
  }

  static double AsNumber(const Json& v, const std::string& name) {
    if (!v.is_number()) SchemaFail(name, "must be a number");
    return v.get<double>();
  }

  static std::string AsString(const Json& v, const std::string& name) {
    if (!v.is_string()) SchemaFail(name, "must be a string");
    return v.get<std::string>();
  }

 private:
  const Json& j_;
  std::string where_;
  std::set<std::string> used_;
};

const Json& AsArray(const Json& v, const std::string& name) {
  if (!v.is_array()) SchemaFail(name, "must be an array");
  return v;
}

std::string Indexed(const std::string& name, std::size_t k) {
  return name + "[" + std::to_string(k) + "]";
}

std::vector<std::string> StringList(const Json& v, const std::string& name) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < AsArray(v, name).size(); ++k) {
    out.push_back(Fields::AsString(v[k], Indexed(name, k)));
  }
  return out;
}

void ReadPaths(const Json& j, Scenario& s) {
  if (!j.is_object()) SchemaFail("paths", "must be an object of vertex lists");
  for (const auto& [id, verts] : j.items()) {
    const std::string name = "paths." + id;
    NamedPath p{id, {}};
    for (std::size_t k = 0; k < AsArray(verts, name).size(); ++k) {
      const Json& pt = verts[k];
      const std::string pname = Indexed(name, k);
      if (!pt.is_array() || pt.size() != 2) {
        SchemaFail(pname, "must be an [x, y] pair");
      }
      p.vertices.push_back({Fields::AsNumber(pt[0], pname + "[0]"),
                            Fields::AsNumber(pt[1], pname + "[1]")});
    }
    s.paths.push_back(std::move(p));
  }
}

void ReadVehicles(const Json& j, Scenario& s) {
  for (std::size_t k = 0; k < AsArray(j, "vehicles").size(); ++k) {
    Fields f(j[k], Indexed("vehicles", k));
    VehicleSpec v;
    v.id = Fields::AsString(f.Require("id"), f.Name("id"));
    v.path = Fields::AsString(f.Require("path"), f.Name("path"));
    f.Finish();
    s.vehicles.push_back(std::move(v));
  }
}

void ReadConflicts(const Json& j, Scenario& s) {
  Fields f(j, "conflicts");
  f.Number("radius", s.radius);
  if (const Json* ov = f.Get("overrides")) {
    for (std::size_t k = 0; k < AsArray(*ov, "conflicts.overrides").size();
         ++k) {
      Fields o((*ov)[k], Indexed("conflicts.overrides", k));
      const auto ids = StringList(o.Require("vehicles"), o.Name("vehicles"));
      if (ids.size() != 2) SchemaFail(o.Name("vehicles"), "must name 2 vehicles");
      OverrideSpec spec{ids[0], ids[1], 0, 0.0};
      o.Integer("index", spec.index);
      spec.radius = Fields::AsNumber(o.Require("radius"), o.Name("radius"));
      o.Finish();
      s.overrides.push_back(std::move(spec));
    }
  }
  if (const Json* sp = f.Get("same_path")) {
    for (std::size_t k = 0; k < AsArray(*sp, "conflicts.same_path").size();
         ++k) {
      Fields g((*sp)[k], Indexed("conflicts.same_path", k));
      SamePathSpec spec;
      spec.vehicles = StringList(g.Require("vehicles"), g.Name("vehicles"));
      spec.spacing = Fields::AsNumber(g.Require("spacing"), g.Name("spacing"));
      spec.radius = Fields::AsNumber(g.Require("radius"), g.Name("radius"));
      g.Finish();
      s.same_path.push_back(std::move(spec));
    }
  }
  f.Finish();
}

void ReadPlanner(const Json& j, Scenario& s) {
  Fields f(j, "planner");
  std::string strategy(StrategyName(s.strategy));
  f.String("strategy", strategy);
  std::string budget = s.budget.ToString();
  f.String("budget", budget);
  f.Unsigned("seed", s.seed);
  f.Finish();
  try {
    s.strategy = ParseStrategy(strategy);
  } catch (const Error&) {
    SchemaFail("planner.strategy", "must be incremental or pairwise");
  }
  try {
    s.budget = Budget::Parse(budget);
  } catch (const Error&) {
    SchemaFail("planner.budget", "must be all, count:N or time:S");
  }
}

void ReadControl(const Json& j, SimConfig& c) {
  Fields f(j, "control");
  NmpcConfig& n = c.nmpc;
  f.Integer("horizon", n.horizon);
  f.Number("dt", n.dt);
  f.Number("v_max", n.v_max);
  f.Integer("max_iterations", n.max_iterations);
  f.Number("stationarity_tolerance", n.stationarity_tolerance);
  f.Number("penalty", n.penalty);
  if (const Json* w = f.Get("weights")) {
    Fields g(*w, "control.weights");
    g.Number("position", n.w_position);
    g.Number("velocity", n.w_velocity);
    g.Number("heading", n.w_heading);
    g.Number("effort", n.w_effort);
    g.Number("smoothness", n.w_smoothness);
    g.Number("steering_smoothness", n.w_steering_smoothness);
    g.Number("terminal_position", n.w_terminal_position);
    g.Number("terminal_velocity", n.w_terminal_velocity);
    g.Number("terminal_heading", n.w_terminal_heading);
    g.Finish();
  }
  if (const Json* v = f.Get("vehicle")) {
    Fields g(*v, "control.vehicle");
    VehicleParams& p = c.params;
    g.Number("wheelbase", p.wheelbase);
    g.Number("a_min", p.a_min);
    g.Number("a_max", p.a_max);
    g.Number("delta_rate_min", p.delta_rate_min);
    g.Number("delta_rate_max", p.delta_rate_max);
    g.Number("delta_min", p.delta_min);
    g.Number("delta_max", p.delta_max);
    g.Number("lat_acc_min", p.lat_acc_min);
    g.Number("lat_acc_max", p.lat_acc_max);
    g.Finish();
  }
  if (const Json* sim = f.Get("simulation")) {
    Fields g(*sim, "control.simulation");
    std::string init(InitialSpeedName(c.initial_speed));
    g.String("initial_speed", init);
    g.Number("occupancy_radius_scale", c.occupancy_radius_scale);
    g.Number("goal_tolerance", c.goal_tolerance);
    g.Number("stop_speed", c.stop_speed);
    g.Number("settle_time", c.settle_time);
    g.Finish();
    try {
      c.initial_speed = ParseInitialSpeed(init);
    } catch (const Error&) {
      SchemaFail("control.simulation.initial_speed",
                 "must be rest or reference");
    }
  }
  f.Finish();
}

void Validate(const Scenario& s) {
  if (s.version != kScenarioVersion) {
    Invalid("unsupported scenario version " + std::to_string(s.version));
  }
  if (s.vehicles.empty()) Invalid("scenario has no vehicles");
  std::set<std::string> ids;
  for (const VehicleSpec& v : s.vehicles) {
    if (!ids.insert(v.id).second) Invalid("duplicate vehicle id '" + v.id + "'");
    if (s.FindPath(v.path) == nullptr) {
      Invalid("vehicle '" + v.id + "' references missing path '" + v.path +
              "'");
    }
  }
  for (const NamedPath& p : s.paths) PolylinePath::Build(p.vertices);
  if (!(s.radius > 0.0)) Invalid("conflict radius must be positive");
  for (const OverrideSpec& o : s.overrides) {
    const int a = s.VehicleIndex(o.first);
    const int b = s.VehicleIndex(o.second);
    if (a < 0 || b < 0) Invalid("override names an unknown vehicle");
    if (a == b) Invalid("override must name two different vehicles");
    if (o.index < 0) Invalid("override index must be >= 0");
    if (!(o.radius > 0.0)) Invalid("override radius must be positive");
  }
  for (const SamePathSpec& g : s.same_path) {
    if (g.vehicles.size() < 2) Invalid("same-path group needs 2+ vehicles");
    std::set<std::string> members;
    for (const std::string& id : g.vehicles) {
      const int v = s.VehicleIndex(id);
      if (v < 0) Invalid("same-path group names unknown vehicle '" + id + "'");
      if (!members.insert(id).second) {
        Invalid("same-path group lists '" + id + "' twice");
      }
      if (s.vehicles[v].path != s.vehicles[s.VehicleIndex(g.vehicles[0])].path) {
        Invalid("same-path group vehicles must share one path id");
      }
    }
    if (!(g.spacing > 0.0) || !(g.radius > 0.0)) {
      Invalid("same-path spacing and radius must be positive");
    }
  }
  try {
    s.control.nmpc.Validate();
    s.control.params.Validate();
  } catch (const Error& e) {
    Invalid(e.what());
  }
  if (!(s.control.occupancy_radius_scale > 0.0) ||
      !(s.control.goal_tolerance > 0.0) || !(s.control.stop_speed >= 0.0) ||
      !(s.control.settle_time >= 0.0)) {
    Invalid("simulation tolerances must be positive");
  }
}

Json Pt(Point2 p) { return Json::array({p.x, p.y}); }

}  // namespace

int Scenario::VehicleIndex(std::string_view id) const {
  for (std::size_t k = 0; k < vehicles.size(); ++k) {
    if (vehicles[k].id == id) return static_cast<int>(k);
  }
  return -1;
}

const NamedPath* Scenario::FindPath(std::string_view id) const {
  for (const NamedPath& p : paths) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

Scenario ParseScenario(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  Scenario s;
  Fields f(j, "");
  f.Integer("version", s.version);
  ReadPaths(f.Require("paths"), s);
  ReadVehicles(f.Require("vehicles"), s);
  if (const Json* c = f.Get("conflicts")) ReadConflicts(*c, s);
  if (const Json* p = f.Get("planner")) ReadPlanner(*p, s);
  if (const Json* c = f.Get("control")) ReadControl(*c, s.control);
  f.Finish();
  Validate(s);
  return s;
}

Scenario LoadScenario(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kParseError,
                "cannot read scenario file '" + file.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseScenario(buf.str());
}

nlohmann::ordered_json ScenarioToJson(const Scenario& s) {
  Json j;
  j["version"] = s.version;
  Json paths = Json::object();
  for (const NamedPath& p : s.paths) {
    Json verts = Json::array();
    for (Point2 v : p.vertices) verts.push_back(Pt(v));
    paths[p.id] = std::move(verts);
  }
  j["paths"] = std::move(paths);
  Json vehicles = Json::array();
  for (const VehicleSpec& v : s.vehicles) {
    Json e;
    e["id"] = v.id;
    e["path"] = v.path;
    vehicles.push_back(std::move(e));
  }
  j["vehicles"] = std::move(vehicles);

  Json conflicts;
  conflicts["radius"] = s.radius;
  Json overrides = Json::array();
  for (const OverrideSpec& o : s.overrides) {
    Json e;
    e["vehicles"] = Json::array({o.first, o.second});
    e["index"] = o.index;
    e["radius"] = o.radius;
    overrides.push_back(std::move(e));
  }
  conflicts["overrides"] = std::move(overrides);
  Json same = Json::array();
  for (const SamePathSpec& g : s.same_path) {
    Json e;
    e["vehicles"] = g.vehicles;
    e["spacing"] = g.spacing;
    e["radius"] = g.radius;
    same.push_back(std::move(e));
  }
  conflicts["same_path"] = std::move(same);
  j["conflicts"] = std::move(conflicts);

  Json planner;
  planner["strategy"] = std::string(StrategyName(s.strategy));
  planner["budget"] = s.budget.ToString();
  planner["seed"] = s.seed;
  j["planner"] = std::move(planner);

  const NmpcConfig& n = s.control.nmpc;
  const VehicleParams& p = s.control.params;
  Json control;
  control["horizon"] = n.horizon;
  control["dt"] = n.dt;
  control["v_max"] = n.v_max;
  control["max_iterations"] = n.max_iterations;
  control["stationarity_tolerance"] = n.stationarity_tolerance;
  control["penalty"] = n.penalty;
  Json w;
  w["position"] = n.w_position;
  w["velocity"] = n.w_velocity;
  w["heading"] = n.w_heading;
  w["effort"] = n.w_effort;
  w["smoothness"] = n.w_smoothness;
  w["steering_smoothness"] = n.w_steering_smoothness;
  w["terminal_position"] = n.w_terminal_position;
  w["terminal_velocity"] = n.w_terminal_velocity;
  w["terminal_heading"] = n.w_terminal_heading;
  control["weights"] = std::move(w);
  Json v;
  v["wheelbase"] = p.wheelbase;
  v["a_min"] = p.a_min;
  v["a_max"] = p.a_max;
  v["delta_rate_min"] = p.delta_rate_min;
  v["delta_rate_max"] = p.delta_rate_max;
  v["delta_min"] = p.delta_min;
  v["delta_max"] = p.delta_max;
  v["lat_acc_min"] = p.lat_acc_min;
  v["lat_acc_max"] = p.lat_acc_max;
  control["vehicle"] = std::move(v);
  Json sim;
  sim["initial_speed"] = std::string(InitialSpeedName(s.control.initial_speed));
  sim["occupancy_radius_scale"] = s.control.occupancy_radius_scale;
  sim["goal_tolerance"] = s.control.goal_tolerance;
  sim["stop_speed"] = s.control.stop_speed;
  sim["settle_time"] = s.control.settle_time;
  control["simulation"] = std::move(sim);
  j["control"] = std::move(control);
  return j;
}

std::string WriteScenario(const Scenario& scenario) {
  return ScenarioToJson(scenario).dump(2) + "\n";
}

ScenarioModel BuildModel(const Scenario& s) {
  ScenarioModel m;
  for (const VehicleSpec& v : s.vehicles) {
    m.vehicle_paths.push_back(PolylinePath::Build(s.FindPath(v.path)->vertices));
  }
  ConflictConfig config;
  config.radius = s.radius;
  for (const OverrideSpec& o : s.overrides) {
    config.overrides.push_back(
        {s.VehicleIndex(o.first), s.VehicleIndex(o.second), o.index, o.radius});
  }
  for (const SamePathSpec& g : s.same_path) {
    SamePathGroup group{{}, g.spacing, g.radius};
    for (const std::string& id : g.vehicles) {
      group.vehicles.push_back(s.VehicleIndex(id));
    }
    config.same_path.push_back(std::move(group));
  }
  m.conflicts = BuildConflictSet(m.vehicle_paths, config);
  for (const PolylinePath& p : m.vehicle_paths) {
    m.problem.path_lengths.push_back(p.length());
  }
  m.problem.conflicts = m.conflicts;
  return m;
}

}  // namespace coordplan
