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

#include "cutgap/cutlp.hpp"

#include <algorithm>

#include "cutgap/error.hpp"
#include "cutgap/lp.hpp"

namespace cutgap {

FractionalSolution::FractionalSolution(int n) : n_(n) {
  if (n < 1) Fail(ErrorKind::kInvalidArgument, "solution needs at least one vertex");
}

void FractionalSolution::Set(VertexId u, VertexId v, const Rational& value) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) {
    Fail(ErrorKind::kInvalidArgument,
         "invalid edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  if (value < 0) Fail(ErrorKind::kInvalidArgument, "edge values must be nonnegative");
  if (value == 0) {
    values_.erase(MakePair(u, v));
  } else {
    values_[MakePair(u, v)] = value;
  }
}

void FractionalSolution::Add(VertexId u, VertexId v, const Rational& value) {
  Set(u, v, Get(u, v) + value);
}

Rational FractionalSolution::Get(VertexId u, VertexId v) const {
  auto it = values_.find(MakePair(u, v));
  return it == values_.end() ? Rational(0) : it->second;
}

Rational FractionalSolution::CutValue(const CutSet& s) const {
  Rational total;
  for (const auto& [e, x] : values_) {
    if (s.contains(e.first) != s.contains(e.second)) total += x;
  }
  return total;
}

Rational FractionalSolution::CrossValue(const CutSet& s, const CutSet& t) const {
  Rational total;
  for (const auto& [e, x] : values_) {
    if ((s.contains(e.first) && t.contains(e.second)) ||
        (t.contains(e.first) && s.contains(e.second))) {
      total += x;
    }
  }
  return total;
}

Rational FractionalSolution::Degree(VertexId v) const {
  Rational total;
  for (const auto& [e, x] : values_) {
    if (e.first == v || e.second == v) total += x;
  }
  return total;
}

MultiGraph FractionalSolution::SupportGraph() const {
  MultiGraph g(n_);
  for (const auto& [e, x] : values_) g.AddEdge(e.first, e.second, 1);
  return g;
}

std::vector<std::vector<Rational>> FractionalSolution::WeightMatrix() const {
  std::vector<std::vector<Rational>> w(n_, std::vector<Rational>(n_));
  for (const auto& [e, x] : values_) {
    w[e.first][e.second] = x;
    w[e.second][e.first] = x;
  }
  return w;
}

const char* ToString(LPVariant variant) {
  return variant == LPVariant::kBounded ? "nkb" : "nk";
}

std::optional<CutViolation> Separate(const FractionalSolution& x, int k) {
  if (x.vertex_count() < 2) return std::nullopt;
  auto [side, value] = StoerWagner(x.WeightMatrix());
  if (value >= k) return std::nullopt;
  return CutViolation{CutSet::FromMembers(x.vertex_count(), side).Normalized(), value};
}

std::optional<CutViolation> Separate(const CutLP& lp, const FractionalSolution& x) {
  if (x.vertex_count() != lp.graph.vertex_count()) {
    Fail(ErrorKind::kInvalidArgument, "solution and graph disagree on vertex count");
  }
  return Separate(x, lp.k);
}

FeasibilityReport CheckFeasibility(const FractionalSolution& x, int k, LPVariant variant) {
  // Both families are checked so a report names a violated cut whenever one exists.
  FeasibilityReport report;
  report.violated_cut = Separate(x, k);
  if (variant == LPVariant::kBounded) {
    for (VertexId v = 0; v < x.vertex_count(); ++v) {
      Rational d = x.Degree(v);
      if (d != k) {
        report.violated_degree = DegreeViolation{v, d};
        break;
      }
    }
  }
  report.feasible = !report.violated_cut && !report.violated_degree;
  return report;
}

bool CheckFeasible(const FractionalSolution& x, int k, LPVariant variant) {
  return CheckFeasibility(x, k, variant).feasible;
}

FractionalSolution Scale(const FractionalSolution& x, const Rational& factor) {
  if (factor <= 0) Fail(ErrorKind::kInvalidArgument, "scale factor must be positive");
  FractionalSolution out(x.vertex_count());
  out.graph_ref = x.graph_ref;
  for (const auto& [e, v] : x.values()) out.Set(e.first, e.second, v * factor);
  return out;
}

namespace {

std::vector<Rational> CutRow(const MultiGraph& g, const CutSet& s) {
  std::vector<Rational> row(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edges()[i];
    if (s.contains(e.u) != s.contains(e.v)) row[i] = 1;
  }
  return row;
}

}  // namespace

CutLPResult Solve(const CutLP& lp) {
  if (lp.k < 1) Fail(ErrorKind::kInvalidArgument, "k must be at least 1");
  const MultiGraph& g = lp.graph;
  const int n = g.vertex_count();
  CutLPResult result;
  result.solution = FractionalSolution(n);
  if (n < 2) {
    result.feasible = true;
    return result;
  }
  if (!IsConnected(g)) {
    result.infeasibility_reason = "graph is disconnected: some cut has no crossing edges";
    return result;
  }

  LinearProgram program;
  for (const auto& e : g.edges()) program.objective.push_back(e.cost);
  const Sense singleton_sense =
      lp.variant == LPVariant::kBounded ? Sense::kEqual : Sense::kGreaterEqual;
  for (VertexId v = 0; v < n; ++v) {
    CutSet s(n, {v});
    program.constraints.push_back({CutRow(g, s), singleton_sense, Rational(lp.k)});
    result.active_cuts.push_back(s.Normalized());
  }

  for (;;) {
    ++result.rounds;
    LPOutcome outcome = SolveLP(program);
    if (outcome.status != LPStatus::kOptimal) {
      result.infeasibility_reason = lp.variant == LPVariant::kBounded
                                        ? "degree and cut system is infeasible"
                                        : "cut system is infeasible";
      return result;
    }
    FractionalSolution x(n);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      if (outcome.solution[i] != 0) x.Add(g.edges()[i].u, g.edges()[i].v, outcome.solution[i]);
    }
    auto violation = Separate(x, lp.k);
    if (!violation) {
      result.feasible = true;
      result.value = outcome.value;
      result.solution = std::move(x);
      result.edge_values = std::move(outcome.solution);
      return result;
    }
    if (CutSize(g, violation->cut) == 0) {
      result.infeasibility_reason = "cut " + violation->cut.ToString() + " has no crossing edges";
      return result;
    }
    program.constraints.push_back(
        {CutRow(g, violation->cut), Sense::kGreaterEqual, Rational(lp.k)});
    result.active_cuts.push_back(violation->cut);
  }
}

bool IsMetric(const MultiGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> seen(n, std::vector<int>(n, 0));
  std::vector<std::vector<Rational>> c(n, std::vector<Rational>(n));
  for (const auto& e : g.edges()) {
    if (e.multiplicity != 1) return false;
    if (++seen[e.u][e.v] > 1) return false;
    ++seen[e.v][e.u];
    c[e.u][e.v] = e.cost;
    c[e.v][e.u] = e.cost;
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (seen[u][v] != 1) return false;
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      for (int w = 0; w < n; ++w) {
        if (u == v || v == w || u == w) continue;
        if (c[u][w] > c[u][v] + c[v][w]) return false;
      }
    }
  }
  return true;
}

ParsimonyResult ParsimoniousCompare(const MultiGraph& g, int k) {
  if (!IsMetric(g)) Fail(ErrorKind::kDomain, "parsimony requires metric costs");
  auto unbounded = Solve({g, k, LPVariant::kUnbounded});
  auto bounded = Solve({g, k, LPVariant::kBounded});
  if (!unbounded.feasible || !bounded.feasible) {
    Fail(ErrorKind::kDomain, "relaxation infeasible on a complete graph");
  }
  return {unbounded.value, bounded.value};
}

}  // namespace cutgap
