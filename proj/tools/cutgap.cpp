// Copyright 2026 The cutgap Authors
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

// Command-line front end. Talks to the library only through the C API.
// Exit status: 0 success, 1 domain failure, 2 usage or malformed input.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cutgap/cutgap.h"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kDomainExit = 1;
constexpr int kUsageExit = 2;

// Carries the exit status out of a subcommand.
struct Exit {
  int code;
};

int ExitCode(cutgap_status status) {
  switch (status) {
    case CUTGAP_OK: return 0;
    case CUTGAP_INVALID_ARGUMENT:
    case CUTGAP_PARSE_ERROR: return kUsageExit;
    default: return kDomainExit;
  }
}

void Check(cutgap_status status) {
  if (status == CUTGAP_OK) return;
  std::cerr << "cutgap: " << cutgap_status_name(status) << ": " << cutgap_last_error() << "\n";
  throw Exit{ExitCode(status)};
}

// Owns a string returned by the library.
class Text {
 public:
  Text() = default;
  Text(const Text&) = delete;
  Text& operator=(const Text&) = delete;
  ~Text() { cutgap_string_free(p_); }
  char** out() { return &p_; }
  std::string str() const { return p_ ? p_ : ""; }

 private:
  char* p_ = nullptr;
};

struct GraphHandle {
  cutgap_graph* g = nullptr;
  ~GraphHandle() { cutgap_graph_free(g); }
};

struct SolutionHandle {
  cutgap_solution* x = nullptr;
  ~SolutionHandle() { cutgap_solution_free(x); }
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "cutgap: cannot read " << path << "\n";
    throw Exit{kUsageExit};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void Emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "cutgap: cannot write " << out_path << "\n";
    throw Exit{kDomainExit};
  }
}

void LoadGraph(const std::string& path, GraphHandle& h) { Check(cutgap_graph_read(path.c_str(), &h.g)); }

void LoadSolution(const std::string& path, SolutionHandle& h) {
  Check(cutgap_solution_read(path.c_str(), &h.x));
}

std::uint64_t SeedFromEnvironment(std::uint64_t fallback) {
  const char* env = std::getenv("CUTGAP_SEED");
  if (env == nullptr || *env == '\0') return fallback;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    std::cerr << "cutgap: CUTGAP_SEED must be a nonnegative integer\n";
    throw Exit{kUsageExit};
  }
}

std::string CutText(const json& cut) {
  std::string members;
  for (const auto& v : cut["side"]) {
    if (!members.empty()) members += ", ";
    members += std::to_string(v.get<int>());
  }
  return "{" + members + "} with value " + cut["value"].get<std::string>();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for cut-based LP relaxations of k-edge-connected subgraph problems"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cutgap_version()));

  std::string graph_path, solution_path, out_path, instance_path, multiset_path;
  int k = 2, t = 3, n = 0, a = 1, b = 1, c = 0;
  bool simple = false, face_extreme = false, combination = false;
  bool witness = false, quick = false, allow_two_connected = false;
  std::string min_denominator;
  std::string lp_name = "nk";
  int min_max_degree = 0;
  std::uint64_t seed = 1;

  auto* solve = app.add_subcommand("solve", "Solve the cut LP on a graph");
  solve->add_option("--graph", graph_path, "graph file (JSON or edge list)")->required();
  solve->add_option("--k", k, "connectivity requirement")->required();
  solve->add_option("--lp", lp_name, "nk: cut constraints only; nkb: plus x(delta(v)) = k")
      ->check(CLI::IsMember({"nk", "nkb"}));
  solve->add_option("--certificate", out_path, "write active cuts and the basic solution here");

  auto* separate = app.add_subcommand("separate", "Check a solution against the cut LP");
  separate->add_option("--solution", solution_path)->required();
  separate->add_option("--k", k)->required();
  separate->add_option("--lp", lp_name, "nk or nkb")->check(CLI::IsMember({"nk", "nkb"}));

  auto* construct = app.add_subcommand("construct", "Build the Fibonacci extreme point");
  construct->add_option("--t", t, "half the vertex count, t >= 3")->required();
  construct->add_option("--out", out_path);

  auto* verify = app.add_subcommand("verify", "Certify or refute extremeness");
  verify->add_option("--solution", solution_path)->required();
  verify->add_option("--k", k)->required();
  verify->add_option("--out", out_path);

  auto* enumerate = app.add_subcommand("enumerate", "List extreme points on n vertices");
  enumerate->add_option("--n", n)->required();
  enumerate->add_option("--min-denominator", min_denominator, "keep classes with denominator >= D");
  enumerate->add_option("--min-degree", min_max_degree, "keep classes whose support has max degree >= M");
  enumerate->add_flag("--allow-two-connected", allow_two_connected,
                      "do not require 3-vertex-connected supports");
  enumerate->add_option("--out", out_path);

  auto* stats = app.add_subcommand("stats", "Fractionality, denominator and degree of a solution");
  stats->add_option("--solution", solution_path)->required();

  auto* gap = app.add_subcommand("gap", "Domination gap by Hamiltonian cycles");
  gap->add_option("--solution", solution_path)->required();
  gap->add_flag("--combination", combination, "print the cycle combination as JSON");
  gap->add_option("--out", out_path);

  auto* lift = app.add_subcommand("lift", "Directed lift of a solution");
  lift->add_option("--solution", solution_path)->required();
  lift->add_flag("--face-extreme", face_extreme, "find a vertex of the lifted face");
  lift->add_option("--seed", seed, "seed for fallback objectives (default CUTGAP_SEED or 1)");
  lift->add_option("--out", out_path);

  auto* reduce = app.add_subcommand("reduce", "Reduction gadgets");
  reduce->require_subcommand(1);
  auto* to_kecss = reduce->add_subcommand("pcot-to-kecss", "Path cover instance to k-ECSS");
  to_kecss->add_option("--instance", instance_path)->required();
  to_kecss->add_option("--k", k)->required();
  to_kecss->add_flag("--simple", simple, "blow vertices up into cliques");
  to_kecss->add_option("--out", out_path);
  auto* to_pcot = reduce->add_subcommand("setcover-to-pcot", "Set cover instance to path cover");
  to_pcot->add_option("--instance", instance_path)->required();
  to_pcot->add_option("--out", out_path);

  auto* convert = app.add_subcommand("convert", "Conversions");
  convert->require_subcommand(1);
  auto* to_ecss = convert->add_subcommand("ecsm-to-ecss", "Remove parallel edges of a 2-ECSM");
  to_ecss->add_option("--graph", graph_path, "complete metric graph")->required();
  to_ecss->add_option("--multiset", multiset_path)->required();
  to_ecss->add_option("--out", out_path);

  auto* split = app.add_subcommand("split", "Split into a- and b-edge-connected parts");
  split->add_option("--graph", graph_path)->required();
  split->add_option("--a", a)->required();
  split->add_option("--b", b)->required();
  split->add_flag("--witness", witness, "check g as a lower-bound witness for f(a, b)");

  auto* split_bound = app.add_subcommand("split-bound", "Cost ratio from a splitting constant");
  split_bound->add_option("--c", c)->required();
  split_bound->add_option("--k", k)->required();
  split_bound->add_option("--t", t)->required();
  split_bound->add_option("--n", n)->required();

  auto* report = app.add_subcommand("report", "Regenerate the regression table");
  report->add_flag("--quick", quick, "skip enumeration and the larger gap instances");
  report->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageExit;
  }

  try {
    if (solve->parsed()) {
      GraphHandle g;
      LoadGraph(graph_path, g);
      Text text;
      Check(cutgap_solve(g.g, k, lp_name == "nkb", nullptr, text.out()));
      const json doc = json::parse(text.str());
      if (!out_path.empty()) Emit(text.str(), out_path);
      if (!doc["feasible"].get<bool>()) {
        std::cerr << "cutgap: infeasible: " << doc["infeasibility_reason"].get<std::string>() << "\n";
        return kDomainExit;
      }
      std::cout << doc["value"].get<std::string>() << "\n";
    } else if (separate->parsed()) {
      SolutionHandle x;
      LoadSolution(solution_path, x);
      Text text;
      Check(cutgap_separate(x.x, k, lp_name == "nkb", text.out()));
      Emit(text.str(), "");
    } else if (construct->parsed()) {
      SolutionHandle x;
      Check(cutgap_construct_fibonacci(t, &x.x));
      Text text;
      Check(cutgap_solution_to_json(x.x, text.out()));
      Emit(text.str(), out_path);
    } else if (verify->parsed()) {
      SolutionHandle x;
      LoadSolution(solution_path, x);
      Text text;
      Check(cutgap_verify_extreme(x.x, k, text.out()));
      Emit(text.str(), out_path);
      const json doc = json::parse(text.str());
      if (!doc["extreme"].get<bool>()) {
        const json& r = doc["refutation"];
        std::cerr << "cutgap: not an extreme point (" << r["stage"].get<std::string>() << ")";
        if (r.contains("violated_cut")) std::cerr << ": violated cut " << CutText(r["violated_cut"]);
        if (r.contains("violated_degree")) {
          std::cerr << (r.contains("violated_cut") ? "; " : ": ") << "vertex "
                    << r["violated_degree"]["vertex"].get<int>() << " has degree "
                    << r["violated_degree"]["degree"].get<std::string>();
        }
        std::cerr << "\n";
        return kDomainExit;
      }
    } else if (enumerate->parsed()) {
      json filters = json::object();
      if (!min_denominator.empty()) filters["min_denominator"] = min_denominator;
      if (min_max_degree > 0) filters["min_max_degree"] = min_max_degree;
      if (allow_two_connected) filters["require_three_connected"] = false;
      if (const char* env = std::getenv("CUTGAP_MAX_N"); env != nullptr && *env != '\0') {
        int max_n = 0;
        try {
          max_n = std::stoi(env);
        } catch (const std::exception&) {
          std::cerr << "cutgap: CUTGAP_MAX_N must be an integer\n";
          return kUsageExit;
        }
        std::cerr << "cutgap: WARNING: CUTGAP_MAX_N=" << max_n
                  << " overrides the enumeration size bound; runs may take very long\n";
        filters["max_n"] = max_n;
      }
      Text text;
      Check(cutgap_enumerate(n, filters.dump().c_str(), text.out()));
      Emit(text.str(), out_path);
    } else if (stats->parsed()) {
      SolutionHandle x;
      LoadSolution(solution_path, x);
      Text text;
      Check(cutgap_stats(x.x, text.out()));
      Emit(text.str(), "");
    } else if (gap->parsed()) {
      SolutionHandle x;
      LoadSolution(solution_path, x);
      Text text;
      Check(cutgap_domination_gap(x.x, text.out()));
      if (combination) {
        Emit(text.str(), out_path);
      } else {
        Emit(json::parse(text.str())["t"].get<std::string>() + "\n", out_path);
      }
    } else if (lift->parsed()) {
      SolutionHandle x;
      LoadSolution(solution_path, x);
      if (lift->count("--seed") == 0) seed = SeedFromEnvironment(seed);
      Text text;
      Check(cutgap_lift(x.x, face_extreme, seed, text.out()));
      Emit(text.str(), out_path);
    } else if (to_kecss->parsed()) {
      const std::string inst = ReadFile(instance_path);
      Text text;
      Check(cutgap_reduce_pcot_to_kecss(inst.c_str(), k, simple, text.out()));
      Emit(text.str(), out_path);
    } else if (to_pcot->parsed()) {
      const std::string inst = ReadFile(instance_path);
      Text text;
      Check(cutgap_reduce_setcover_to_pcot(inst.c_str(), text.out()));
      Emit(text.str(), out_path);
    } else if (to_ecss->parsed()) {
      GraphHandle g;
      LoadGraph(graph_path, g);
      const std::string multiset = ReadFile(multiset_path);
      Text text;
      Check(cutgap_convert_ecsm_to_ecss(g.g, multiset.c_str(), text.out()));
      Emit(text.str(), out_path);
    } else if (split->parsed()) {
      GraphHandle g;
      LoadGraph(graph_path, g);
      Text text;
      if (witness) {
        Check(cutgap_split_witness(g.g, a, b, text.out()));
        Emit(text.str(), "");
        if (!json::parse(text.str())["verified"].get<bool>()) return kDomainExit;
      } else {
        Check(cutgap_split(g.g, a, b, text.out()));
        Emit(text.str(), "");
      }
    } else if (split_bound->parsed()) {
      Text text;
      Check(cutgap_split_bound(c, k, t, n, text.out()));
      Emit(text.str(), "");
    } else if (report->parsed()) {
      json options = json::object();
      if (quick) {
        options["max_gap_t"] = 4;
        options["enumeration_max_n"] = 0;
      }
      Text text;
      Check(cutgap_report(options.dump().c_str(), text.out()));
      Emit(text.str(), out_path);
      if (!json::parse(text.str())["all_match"].get<bool>()) return kDomainExit;
    }
  } catch (const Exit& e) {
    return e.code;
  }
  return 0;
}
