// Copyright 2026 The strongeo Authors
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

#include "cli.hpp"

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <new>
#include <optional>

#include "CLI11.hpp"
#include "strongeo/apollonian.hpp"
#include "strongeo/errors.hpp"
#include "strongeo/graph_io.hpp"
#include "strongeo/random_graph.hpp"
#include "strongeo/reduction.hpp"
#include "strongeo/sierpinski.hpp"
#include "strongeo/solver.hpp"
#include "strongeo/witness_io.hpp"

namespace strongeo::cli {
namespace {

namespace fs = std::filesystem;

struct Staged {
  fs::path path;
  std::string content;
};

// Nothing touches the filesystem until the command has fully succeeded;
// each file is then written beside its target and renamed into place.
class OutputPlan {
 public:
  explicit OutputPlan(std::ostream& out) : out_(out) {}

  void to_file_or_stdout(const std::string& path, std::string content) {
    if (path.empty()) {
      stdout_ += content;
    } else {
      files_.push_back({path, std::move(content)});
    }
  }
  void to_file(const std::string& path, std::string content) {
    if (!path.empty()) files_.push_back({path, std::move(content)});
  }

  void commit() {
    for (const auto& file : files_) {
      fs::path tmp = file.path;
      tmp += ".partial";
      {
        std::ofstream stream(tmp, std::ios::binary | std::ios::trunc);
        if (!stream) throw GraphError("cannot write " + file.path.string());
        stream << file.content;
        if (!stream.flush()) throw GraphError("cannot write " + file.path.string());
      }
      fs::rename(tmp, file.path);
    }
    out_ << stdout_;
  }

 private:
  std::ostream& out_;
  std::vector<Staged> files_;
  std::string stdout_;
};

struct LimitFlags {
  std::uint64_t cap = kDefaultGeodesicCap;
  std::uint64_t budget = SolveLimits{}.node_budget;
  std::int64_t time_ms = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--limits-cap", cap, "Geodesics enumerated per pair before giving up")
        ->capture_default_str();
    cmd->add_option("--budget", budget, "Search nodes per cover search")->capture_default_str();
    cmd->add_option("--time-ms", time_ms, "Wall-clock budget in milliseconds (0 = none)");
  }

  SolveLimits limits() const {
    SolveLimits l;
    l.geodesic_cap = cap;
    l.node_budget = budget;
    if (time_ms > 0) l.time_budget = std::chrono::milliseconds(time_ms);
    l.validate();
    return l;
  }
};

Graph load_graph(const std::string& path) { return graph_from_json(read_json_file(path)); }

Json stats_to_json(const SearchStats& stats) {
  return {{"nodes_expanded", stats.nodes_expanded},
          {"pairs_enumerated", stats.pairs_enumerated},
          {"geodesics_enumerated", stats.geodesics_enumerated},
          {"subsets_tried", stats.subsets_tried}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Strong geodetic sets: generate, solve, verify and reduce.", "sgeo"};
  app.require_subcommand(1);

  std::string out_path;
  std::string dot_path;

  // gen
  auto* gen = app.add_subcommand("gen", "Write a generated graph as canonical JSON");
  gen->require_subcommand(1);
  unsigned level = 0;
  std::string witness_path;
  std::size_t order = 0;
  double probability = 0;
  std::optional<std::uint64_t> seed;
  std::string input_path;

  auto* gen_apollonian = gen->add_subcommand("apollonian", "Complete Apollonian network A(r)");
  gen_apollonian->add_option("r", level, "Level r >= 0")->required();
  gen_apollonian->add_option("--witness", witness_path, "Also write the optimal witness here");
  auto* gen_sierpinski = gen->add_subcommand("sierpinski", "Sierpinski graph S(3,n)");
  gen_sierpinski->add_option("n", level, "Level n >= 1")->required();
  auto* gen_random = gen->add_subcommand("random", "Connected G(n,p) from a seed");
  gen_random->add_option("n", order, "Vertex count")->required();
  gen_random->add_option("p", probability, "Edge probability")->required();
  gen_random->add_option("seed,--seed", seed, "Seed, mandatory");
  auto* gen_gadget = gen->add_subcommand("gadget", "Reduction gadget of a graph file");
  gen_gadget->add_option("graph", input_path, "Graph JSON")->required();
  for (auto* sub : {gen_apollonian, gen_sierpinski, gen_random, gen_gadget}) {
    sub->add_option("--out", out_path, "Output path (default stdout)");
    sub->add_option("--dot", dot_path, "Also write Graphviz DOT here");
  }

  // solve
  auto* solve = app.add_subcommand("solve", "Exact sg, geodetic or domination number");
  std::string mode = "sg";
  LimitFlags solve_limits;
  solve->add_option("graph", input_path, "Graph JSON")->required();
  solve->add_option("--mode", mode, "sg | geodetic | dominating")
      ->check(CLI::IsMember({"sg", "geodetic", "dominating"}))
      ->capture_default_str();
  solve->add_option("--out", out_path, "Result path (default stdout)");
  solve_limits.attach(solve);

  // verify
  auto* verify = app.add_subcommand("verify", "Check a strong geodetic witness");
  std::string witness_input;
  verify->add_option("graph", input_path, "Graph JSON")->required();
  verify->add_option("witness", witness_input, "Witness JSON")->required();
  verify->add_option("--out", out_path, "Verdict path (default stdout)");

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Build the domination gadget, optionally checking it");
  bool check = false;
  std::string report_path;
  LimitFlags reduce_limits;
  reduce->add_option("graph", input_path, "Graph JSON")->required();
  reduce->add_option("--out", out_path, "Gadget path (default stdout unless --check)");
  reduce->add_option("--dot", dot_path, "Also write the gadget as DOT");
  reduce->add_flag("--check", check, "Solve both sides and check sg(gadget) = gamma + n");
  reduce->add_option("--report", report_path, "Report path (default stdout)");
  reduce_limits.attach(reduce);

  std::vector<const char*> argv{"sgeo"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  OutputPlan plan(out);
  int code = kOk;
  try {
    if (*gen) {
      Json j;
      DotOptions dot;
      Graph g;
      if (*gen_apollonian) {
        const auto an = apollonian(level);
        j = apollonian_to_json(an);
        g = an.graph();
        dot.name = "A(" + std::to_string(level) + ")";
        if (!witness_path.empty()) plan.to_file(witness_path, dump_witness(apollonian_witness(an)));
      } else if (*gen_sierpinski) {
        const auto s = sierpinski(level);
        j = sierpinski_to_json(s);
        g = s.graph();
        dot.name = "S(3," + std::to_string(level) + ")";
        dot.labels_as_names = true;
      } else if (*gen_random) {
        if (!seed) throw GraphError("gen random needs a seed");
        g = random_connected_gnp(order, probability, *seed);
        j = graph_to_json(g);
      } else {
        const auto gadget = build_gadget(load_graph(input_path));
        j = gadget_to_json(gadget);
        g = gadget.graph();
        dot.name = "gadget";
      }
      plan.to_file_or_stdout(out_path, dump_json(j));
      plan.to_file(dot_path, graph_to_dot(g, dot));
    } else if (*solve) {
      const Graph g = load_graph(input_path);
      const SolveLimits limits = solve_limits.limits();
      Json result;
      result["mode"] = mode;
      if (mode == "sg") {
        const auto sg = strong_geodetic_number(g, limits);
        result["status"] = to_string(sg.status);
        result["value"] = sg.sg;
        result["lower_bound"] = sg.lower_bound;
        result["witness"] = witness_to_json(sg.witness);
        result["stats"] = stats_to_json(sg.stats);
        if (sg.status != SolveStatus::kOptimal) code = kIndeterminate;
      } else if (mode == "geodetic") {
        const auto geo = geodetic_number(g);
        result["status"] = "optimal";
        result["value"] = geo.value;
        result["set"] = geo.set;
      } else {
        const auto dom = dominating_number(g, limits);
        result["status"] = to_string(dom.status);
        result["value"] = dom.gamma;
        result["set"] = dom.witness.set;
        result["stats"] = {{"nodes_expanded", dom.nodes_expanded}};
        if (dom.status != SolveStatus::kOptimal) code = kIndeterminate;
      }
      plan.to_file_or_stdout(out_path, dump_json(result));
    } else if (*verify) {
      const Graph g = load_graph(input_path);
      const auto w = witness_from_json(read_json_file(witness_input));
      const auto verdict = verify_witness(g, w);
      Json result;
      result["valid"] = verdict.valid;
      if (!verdict.valid) {
        result["violation"] = verdict.violation;
        if (verdict.pair) result["pair"] = {verdict.pair->first, verdict.pair->second};
        code = kInvalidWitness;
      }
      plan.to_file_or_stdout(out_path, dump_json(result));
    } else if (*reduce) {
      const auto gadget = build_gadget(load_graph(input_path));
      const std::string gadget_text = dump_json(gadget_to_json(gadget));
      if (check) {
        plan.to_file(out_path, gadget_text);
        const auto report = check_equivalence(gadget.base(), reduce_limits.limits());
        plan.to_file_or_stdout(report_path, dump_json(report_to_json(report)));
        if (!report.resolved) {
          err << "limits reached before the identity could be decided\n";
          code = kIndeterminate;
        } else if (!report.all_hold()) {
          err << "THEOREM_VIOLATION";
          for (const auto& v : report.violations) err << ": " << v;
          err << "\n";
          code = kTheoremViolation;
        }
      } else {
        plan.to_file_or_stdout(out_path, gadget_text);
      }
      DotOptions dot;
      dot.name = "gadget";
      plan.to_file(dot_path, graph_to_dot(gadget.graph(), dot));
    }
    plan.commit();
  } catch (const GraphError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const std::bad_alloc&) {
    err << "resource limit: out of memory\n";
    return kResource;
  } catch (const InternalError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  }
  return code;
}

}  // namespace strongeo::cli
