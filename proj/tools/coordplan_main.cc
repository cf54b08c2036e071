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

// coordplan: plan, sweep, simulate, compare and validate vehicle
// coordination scenarios.
//
//   coordplan plan --scenario s.json [--strategy pairwise] [--order a,b,c]
//   coordplan sweep --scenario s.json --budget count:100 --seed 7
//   coordplan simulate --scenario s.json --plan out/plan.json
//   coordplan oracle --scenario s.json --resolution 0.05
//   coordplan validate --scenario s.json [--plan out/plan.json]

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "coordplan/commands.h"
#include "coordplan/error.h"

namespace {

using coordplan::CommandOptions;

struct Flags {
  std::string scenario;
  std::string out_dir = ".";
  std::string strategy;
  std::string budget;
  std::string order;
  std::string plan;
  std::uint64_t seed = 0;
  double resolution = 0.1;
  int max_step = 0;
};

bool Given(CLI::App& verb, const std::string& name) {
  const CLI::Option* opt = verb.get_option_no_throw(name);
  return opt != nullptr && opt->count() > 0;
}

CommandOptions ToOptions(CLI::App& verb, const Flags& f) {
  CommandOptions o;
  o.scenario = f.scenario;
  o.out_dir = f.out_dir;
  if (Given(verb, "--strategy")) o.strategy = f.strategy;
  if (Given(verb, "--budget")) o.budget = f.budget;
  if (Given(verb, "--order")) o.order = f.order;
  if (Given(verb, "--seed")) o.seed = f.seed;
  o.plan = f.plan;
  o.resolution = f.resolution;
  o.max_step = f.max_step;
  return o;
}

CLI::App* AddVerb(CLI::App& app, const std::string& name,
                  const std::string& help, Flags& f) {
  CLI::App* v = app.add_subcommand(name, help);
  v->add_option("--scenario", f.scenario, "scenario JSON file")->required();
  v->add_option("--strategy", f.strategy, "incremental or pairwise")
      ->check(CLI::IsMember({"incremental", "pairwise"}));
  v->add_option("--seed", f.seed, "seed for random order sampling");
  v->add_option("--out-dir", f.out_dir, "directory for output files");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coordinate vehicles along fixed paths"};
  app.require_subcommand(1);
  Flags f;

  CLI::App* plan = AddVerb(app, "plan", "plan one order or the best of a sweep", f);
  plan->add_option("--order", f.order, "comma-separated vehicle ids");
  plan->add_option("--budget", f.budget, "all, count:N or time:S");

  CLI::App* sweep = AddVerb(app, "sweep", "evaluate many orders", f);
  sweep->add_option("--budget", f.budget, "all, count:N or time:S");

  CLI::App* sim = AddVerb(app, "simulate", "closed-loop tracking of a plan", f);
  sim->add_option("--plan", f.plan, "plan.json written by plan")->required();

  CLI::App* oracle =
      AddVerb(app, "oracle", "compare against a lattice search (N <= 3)", f);
  oracle->add_option("--resolution", f.resolution, "lattice spacing in m")
      ->check(CLI::PositiveNumber);
  oracle->add_option("--max-step", f.max_step,
                     "largest move component in cells (0: automatic)")
      ->check(CLI::NonNegativeNumber);

  CLI::App* validate = AddVerb(app, "validate", "check a scenario or plan", f);
  validate->add_option("--plan", f.plan, "optional plan.json to check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : coordplan::kExitInputError;
  }

  try {
    nlohmann::ordered_json summary;
    if (*plan) summary = coordplan::CmdPlan(ToOptions(*plan, f));
    if (*sweep) summary = coordplan::CmdSweep(ToOptions(*sweep, f));
    if (*sim) summary = coordplan::CmdSimulate(ToOptions(*sim, f));
    if (*oracle) summary = coordplan::CmdOracle(ToOptions(*oracle, f));
    if (*validate) summary = coordplan::CmdValidate(ToOptions(*validate, f));
    std::cout << summary.dump(2) << "\n";
    return summary.value("exit_code", 0);
  } catch (const coordplan::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return coordplan::ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
