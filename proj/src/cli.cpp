// Copyright 2026 The mapsched Authors
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

#include "mapsched/cli.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mapsched/bench.hpp"
#include "mapsched/core.hpp"
#include "mapsched/heuristic.hpp"
#include "mapsched/json_io.hpp"
#include "mapsched/oracle.hpp"
#include "mapsched/schema.hpp"
#include "mapsched/shuffle.hpp"
#include "mapsched/solver.hpp"

namespace mapsched::cli {

namespace {

using nlohmann::json;

struct Globals {
  bool json_output = false;
  std::optional<std::uint64_t> seed;
  unsigned threads = 1;
};

struct GenArgs {
  std::string kind = "a2a";
  std::size_t m = 0;
  std::size_t n = 0;
  std::string dist = "constant:1";
  Size q = 0;
  std::string out;
};

struct ValidateArgs {
  std::string instance;
  std::string schema;
  std::string report;
};

struct SolveArgs {
  std::string instance;
  std::string method = "exact";
  bool oracle = false;
  std::uint64_t budget_nodes = SearchBudget{}.max_nodes;
  std::int64_t budget_ms = SearchBudget{}.max_time.count();
  double x_fraction = 0.5;
  std::string out;
  std::string report;
  bool timing = false;
};

struct SimulateArgs {
  std::string instance;
  std::string schema;
  std::string report;
};

struct SweepArgs {
  std::string instance;
  std::vector<Size> q;
  std::string method = "exact";
  std::uint64_t budget_nodes = SearchBudget{}.max_nodes;
  std::int64_t budget_ms = SearchBudget{}.max_time.count();
  double x_fraction = 0.5;
  std::string csv;
};

struct OracleArgs {
  std::string instance;
  std::size_t max_inputs = OracleLimit{}.max_a2a_inputs;
  std::size_t max_pairs = OracleLimit{}.max_x2y_pairs;
  std::string out;
};

// Thrown for failures that map to a specific exit status.
struct Exit {
  int code;
  std::string message;
};

json metrics_to_json(const Metrics& m, const Instance& instance) {
  json doc{{"reducer_count", m.reducer_count},
           {"communication_cost", m.communication_cost},
           {"max_load", m.max_load},
           {"min_load", m.min_load}};
  if (instance.kind() == ProblemKind::A2A) {
    doc["replication"] = m.replication;
  } else {
    const auto split = m.replication.begin() + static_cast<std::ptrdiff_t>(instance.x_count());
    doc["replication"] = json{{"x", std::vector<std::size_t>(m.replication.begin(), split)},
                              {"y", std::vector<std::size_t>(split, m.replication.end())}};
  }
  return doc;
}

json validation_to_json(const ValidationReport& report, const Metrics& m,
                        const Instance& instance, const MappingSchema& schema) {
  json violations = json::array();
  for (const CapacityViolation& v : report.capacity_violations) {
    violations.push_back({{"reducer", v.reducer}, {"load", v.load}});
  }
  json uncovered = json::array();
  for (const PairId& p : report.uncovered_pairs) uncovered.push_back(pair_to_json(p));
  json empty = json::array();
  for (std::size_t r = 0; r < schema.size(); ++r) {
    if (schema.reducer(r).empty()) empty.push_back(r);
  }
  return json{{"valid", report.valid()},
              {"capacity_violations", violations},
              {"uncovered_pairs", uncovered},
              {"empty_reducers", empty},
              {"metrics", metrics_to_json(m, instance)}};
}

json simulation_to_json(const SimReport& sim) {
  json reducers = json::array();
  for (const ReducerActivity& a : sim.per_reducer) {
    reducers.push_back({{"inputs_hosted", a.inputs_hosted},
                        {"load", a.load},
                        {"outputs_computed", a.outputs_computed}});
  }
  return json{{"bytes_shipped", sim.bytes_shipped},
              {"outputs_produced", sim.outputs_produced},
              {"per_reducer", reducers}};
}

// Loads a schema, mapping shape and range errors to the invalid-schema code.
MappingSchema load_schema_checked(const std::string& path, const Instance& instance) {
  try {
    MappingSchema schema = load_schema(path, instance);
    check_compatible(schema, instance);
    return schema;
  } catch (const SchemaError& e) {
    throw Exit{kInvalidSchema, std::string("invalid schema: ") + e.what()};
  }
}

void lint_empty_reducers(const MappingSchema& schema, std::ostream& err) {
  for (std::size_t r = 0; r < schema.size(); ++r) {
    if (schema.reducer(r).empty()) err << "warning: reducer " << r << " is empty\n";
  }
}

int cmd_gen(const GenArgs& args, const Globals& g, std::ostream& out) {
  GenSpec spec;
  spec.kind = parse_problem_kind(args.kind);
  spec.m = args.m;
  spec.n = args.n;
  spec.distribution = parse_distribution(args.dist);
  spec.capacity = args.q;
  if (needs_seed(spec.distribution) && !g.seed) {
    throw Exit{kUsageOrIo, "gen: distribution '" + args.dist + "' requires --seed"};
  }
  spec.seed = g.seed.value_or(0);
  const std::string text = dump(instance_to_json(generate(spec)));
  if (!args.out.empty()) {
    write_file_atomic(args.out, text);
    if (g.json_output) {
      out << dump(json{{"out", args.out}});
    } else {
      out << "wrote " << args.out << "\n";
    }
  } else {
    out << text;
  }
  return kSuccess;
}

int cmd_validate(const ValidateArgs& args, const Globals& g, std::ostream& out,
                 std::ostream& err) {
  const Instance instance = load_instance(args.instance);
  const MappingSchema schema = load_schema_checked(args.schema, instance);
  const ValidationReport report = validate(schema, instance);
  const Metrics m = metrics(schema, instance);
  lint_empty_reducers(schema, err);
  const json doc = validation_to_json(report, m, instance, schema);
  if (!args.report.empty()) write_file_atomic(args.report, dump(doc));
  if (g.json_output) {
    out << dump(doc);
  } else {
    out << (report.valid() ? "valid" : "invalid") << ": z=" << m.reducer_count
        << " cost=" << m.communication_cost << " max_load=" << m.max_load << "\n";
    for (const CapacityViolation& v : report.capacity_violations) {
      out << "capacity violation: reducer " << v.reducer << " load " << v.load << " > "
          << instance.capacity() << "\n";
    }
    for (const PairId& p : report.uncovered_pairs) out << "uncovered pair: " << p << "\n";
  }
  return report.valid() ? kSuccess : kInvalidSchema;
}

int solve_exit_code(SolveStatus status) {
  switch (status) {
    case SolveStatus::Optimal:
      return kSuccess;
    case SolveStatus::Infeasible:
      return kInfeasible;
    default:
      return kNotProvenOptimal;
  }
}

int cmd_solve(const SolveArgs& args, const Globals& g, std::ostream& out) {
  const Instance instance = load_instance(args.instance);
  const std::string method = args.oracle ? "oracle" : args.method;
  SolveReport report;
  if (method == "oracle") {
    const auto start = std::chrono::steady_clock::now();
    if (!check_feasibility(instance).feasible) {
      report.status = SolveStatus::Infeasible;
    } else {
      OracleResult result = oracle_min_z(instance);
      report.lower_bound = lower_bound(instance);
      report.z = result.min_z;
      report.schema = std::move(result.witness);
      report.nodes_explored = result.explored;
      report.status = SolveStatus::Optimal;
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
  } else if (method == "heuristic") {
    report = solve_heuristic(instance, HeuristicOptions{args.x_fraction});
  } else {
    const SearchBudget budget{args.budget_nodes, std::chrono::milliseconds(args.budget_ms)};
    report = solve_exact(instance, budget, SolveOptions{g.threads, {args.x_fraction}});
  }

  json doc{{"method", method},
           {"status", std::string(to_string(report.status))},
           {"z", report.z},
           {"lower_bound", report.lower_bound},
           {"nodes_explored", report.nodes_explored}};
  if (args.timing) {
    doc["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(report.elapsed).count();
  }
  if (report.schema) {
    doc["schema"] = schema_to_json(*report.schema, instance);
    doc["metrics"] = metrics_to_json(metrics(*report.schema, instance), instance);
    if (!args.out.empty()) {
      write_file_atomic(args.out, dump(schema_to_json(*report.schema, instance)));
    }
  } else {
    const FeasibilityReport feas = check_feasibility(instance);
    doc["infeasible_pair"] = pair_to_json(*feas.witness);
  }
  if (!args.report.empty()) write_file_atomic(args.report, dump(doc));

  if (g.json_output) {
    out << dump(doc);
  } else {
    out << to_string(report.status);
    if (report.schema) {
      out << ": z=" << report.z << " lower_bound=" << report.lower_bound
          << " cost=" << metrics(*report.schema, instance).communication_cost
          << " nodes=" << report.nodes_explored;
    } else {
      out << ": pair " << *check_feasibility(instance).witness << " exceeds q="
          << instance.capacity();
    }
    out << "\n";
  }
  return solve_exit_code(report.status);
}

int cmd_simulate(const SimulateArgs& args, const Globals& g, std::ostream& out,
                 std::ostream& err) {
  const Instance instance = load_instance(args.instance);
  const MappingSchema schema = load_schema_checked(args.schema, instance);
  lint_empty_reducers(schema, err);
  SimReport sim;
  try {
    sim = simulate(schema, instance);
  } catch (const SchemaError& e) {
    throw Exit{kInvalidSchema, std::string("invalid schema: ") + e.what()};
  }
  json doc = simulation_to_json(sim);
  doc["communication_cost"] = metrics(schema, instance).communication_cost;
  if (!args.report.empty()) write_file_atomic(args.report, dump(doc));
  if (g.json_output) {
    out << dump(doc);
  } else {
    out << "bytes_shipped=" << sim.bytes_shipped << " outputs=" << sim.outputs_produced
        << " reducers=" << sim.per_reducer.size() << "\n";
  }
  return kSuccess;
}

int cmd_sweep(const SweepArgs& args, const Globals& g, std::ostream& out) {
  const Instance instance = load_instance(args.instance);
  SweepOptions options;
  options.budget = SearchBudget{args.budget_nodes, std::chrono::milliseconds(args.budget_ms)};
  options.heuristic.x_fraction = args.x_fraction;
  options.threads = g.threads;
  const TradeoffCurve curve = sweep(instance, args.q, parse_sweep_method(args.method), options);
  const std::string csv = to_csv(curve);
  if (!args.csv.empty()) write_file_atomic(args.csv, csv);
  if (g.json_output) {
    json points = json::array();
    for (const TradeoffPoint& p : curve.points) {
      json row{{"q", p.q},
               {"method", std::string(to_string(p.method))},
               {"status", std::string(to_string(p.status))}};
      row["z"] = p.z ? json(*p.z) : json(nullptr);
      row["cost"] = p.communication_cost ? json(*p.communication_cost) : json(nullptr);
      points.push_back(row);
    }
    out << dump(json{{"points", points}});
  } else if (args.csv.empty()) {
    out << csv;
  } else {
    out << "wrote " << curve.points.size() << " points to " << args.csv << "\n";
  }
  return kSuccess;
}

int cmd_oracle(const OracleArgs& args, const Globals& g, std::ostream& out) {
  const Instance instance = load_instance(args.instance);
  if (!check_feasibility(instance).feasible) {
    throw Exit{kInfeasible, "oracle: instance is infeasible"};
  }
  OracleResult result;
  try {
    result = oracle_min_z(instance, OracleLimit{args.max_inputs, args.max_pairs});
  } catch (const OracleError& e) {
    throw Exit{kUsageOrIo, e.what()};
  }
  const json schema = schema_to_json(result.witness, instance);
  if (!args.out.empty()) write_file_atomic(args.out, dump(schema));
  if (g.json_output) {
    out << dump(json{{"min_z", result.min_z}, {"explored", result.explored}, {"witness", schema}});
  } else {
    out << "min_z=" << result.min_z << " explored=" << result.explored << "\n";
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reducer assignment for pairwise MapReduce workloads", "mapsched"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  std::uint64_t seed = 0;
  app.add_flag("--json", g.json_output, "Emit a single JSON document on stdout");
  auto* seed_opt = app.add_option("--seed", seed, "Seed for randomized generation");
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("--kind", gen.kind, "a2a or x2y")->check(CLI::IsMember({"a2a", "x2y"}));
  gen_cmd->add_option("--m", gen.m, "Inputs (A2A) or |X| (X2Y)")->required();
  gen_cmd->add_option("--n", gen.n, "|Y| (X2Y)");
  gen_cmd->add_option("--dist", gen.dist,
                      "constant:W | uniform:LO,HI | skewed:BASE,HEAVY,MULT");
  gen_cmd->add_option("--q", gen.q, "Reducer capacity")->required();
  gen_cmd->add_option("--out", gen.out, "Output instance file (stdout if omitted)");

  ValidateArgs val;
  auto* val_cmd = app.add_subcommand("validate", "Validate a schema against an instance");
  val_cmd->add_option("--instance", val.instance)->required();
  val_cmd->add_option("--schema", val.schema)->required();
  val_cmd->add_option("--report", val.report, "Write the validation report here");

  SolveArgs sol;
  auto* sol_cmd = app.add_subcommand("solve", "Find a mapping schema");
  sol_cmd->add_option("--instance", sol.instance)->required();
  sol_cmd->add_option("--method", sol.method)
      ->check(CLI::IsMember({"exact", "heuristic", "oracle"}));
  sol_cmd->add_flag("--oracle", sol.oracle, "Use the exhaustive oracle (tiny instances only)");
  sol_cmd->add_option("--budget-nodes", sol.budget_nodes)->check(CLI::PositiveNumber);
  sol_cmd->add_option("--budget-ms", sol.budget_ms)->check(CLI::PositiveNumber);
  sol_cmd->add_option("--x-fraction", sol.x_fraction, "X share of q for the X2Y grid")
      ->check(CLI::Range(0.0, 1.0));
  sol_cmd->add_option("--out", sol.out, "Write the schema here");
  sol_cmd->add_option("--report", sol.report, "Write the solve report here");
  sol_cmd->add_flag("--timing", sol.timing, "Include elapsed time in the report");

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Simulate the shuffle of a schema");
  sim_cmd->add_option("--instance", sim.instance)->required();
  sim_cmd->add_option("--schema", sim.schema)->required();
  sim_cmd->add_option("--report", sim.report, "Write the simulation report here");

  SweepArgs swp;
  auto* swp_cmd = app.add_subcommand("sweep", "Capacity tradeoff sweep");
  swp_cmd->add_option("--instance", swp.instance)->required();
  swp_cmd->add_option("--q", swp.q, "Comma-separated capacities")->required()->delimiter(',');
  swp_cmd->add_option("--method", swp.method)
      ->check(CLI::IsMember({"exact", "heuristic", "oracle"}));
  swp_cmd->add_option("--budget-nodes", swp.budget_nodes)->check(CLI::PositiveNumber);
  swp_cmd->add_option("--budget-ms", swp.budget_ms)->check(CLI::PositiveNumber);
  swp_cmd->add_option("--x-fraction", swp.x_fraction)->check(CLI::Range(0.0, 1.0));
  swp_cmd->add_option("--csv", swp.csv, "Write the curve as CSV here");

  OracleArgs orc;
  auto* orc_cmd = app.add_subcommand("oracle", "Exhaustive minimum for tiny instances");
  orc_cmd->add_option("--instance", orc.instance)->required();
  orc_cmd->add_option("--max-inputs", orc.max_inputs, "A2A input limit");
  orc_cmd->add_option("--max-pairs", orc.max_pairs, "X2Y pair limit");
  orc_cmd->add_option("--out", orc.out, "Write the witness schema here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const auto selected = app.get_subcommands();
    err << (selected.empty() ? app.help() : selected.front()->help());
    return kUsageOrIo;
  }
  if (seed_opt->count() > 0) g.seed = seed;

  try {
    if (*gen_cmd) return cmd_gen(gen, g, out);
    if (*val_cmd) return cmd_validate(val, g, out, err);
    if (*sol_cmd) return cmd_solve(sol, g, out);
    if (*sim_cmd) return cmd_simulate(sim, g, out, err);
    if (*swp_cmd) return cmd_sweep(swp, g, out);
    if (*orc_cmd) return cmd_oracle(orc, g, out);
  } catch (const Exit& e) {
    err << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageOrIo;
  }
  return kUsageOrIo;
}

}  // namespace mapsched::cli
