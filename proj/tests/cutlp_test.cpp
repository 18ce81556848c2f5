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

#include <random>

#include "cutgap/cutlp.hpp"
#include "cutgap/error.hpp"
#include "cutgap/extreme.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cutgap;

namespace {

MultiGraph Complete(int n, Rational cost = 1) {
  MultiGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.AddEdge(u, v, cost);
  }
  return g;
}

FractionalSolution Tour(int n) {
  FractionalSolution x(n);
  for (int v = 0; v < n; ++v) x.Set(v, (v + 1) % n, 1);
  return x;
}

// Shortest-path closure of random integer weights on K_n, which is metric.
MultiGraph RandomMetric(std::mt19937_64& rng, int n) {
  std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) d[u][v] = d[v][u] = static_cast<long>(1 + rng() % 6);
  }
  for (int m = 0; m < n; ++m) {
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (d[u][m] + d[m][v] < d[u][v]) d[u][v] = d[u][m] + d[m][v];
      }
    }
  }
  MultiGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.AddEdge(u, v, d[u][v]);
  }
  return g;
}

}  // namespace

TEST_CASE("separate_examples") {
  FractionalSolution k4(4);
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) k4.Set(u, v, ParseRational("2/3"));
  }
  CHECK_FALSE(Separate(k4, 2).has_value());

  FractionalSolution path(3);
  path.Set(0, 1, 1);
  path.Set(1, 2, 1);
  auto cut = Separate(path, 2);
  REQUIRE(cut.has_value());
  CHECK(cut->value == 1);
  CHECK(cut->cut.count() == 1);
  CHECK_FALSE(cut->cut.contains(kRoot));

  CHECK_FALSE(Separate(ConstructFibonacci(4), 2).has_value());
}

TEST_CASE("separate_returns_a_minimum_cut") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    FractionalSolution x(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng() % 2) x.Set(u, v, oracle::RandomRational(rng, 4, 3));
      }
    }
    const Rational best = oracle::MinCutValue(x);
    for (int k : {1, 2, 3}) {
      auto cut = Separate(x, k);
      CHECK(cut.has_value() == (best < k));
      if (cut) {
        CHECK(cut->value == best);
        CHECK(x.CutValue(cut->cut) == best);
      }
    }
  }
}

TEST_CASE("check_feasible_examples") {
  CHECK(CheckFeasible(Tour(6), 2, LPVariant::kBounded));
  CHECK_FALSE(CheckFeasible(Tour(6), 3, LPVariant::kBounded));
  CHECK(CheckFeasible(ConstructFibonacci(5), 2, LPVariant::kBounded));
  FractionalSolution heavy = Tour(4);
  heavy.Set(0, 2, 1);
  CHECK(CheckFeasible(heavy, 2, LPVariant::kUnbounded));
  const FeasibilityReport report = CheckFeasibility(heavy, 2, LPVariant::kBounded);
  CHECK_FALSE(report.feasible);
  REQUIRE(report.violated_degree.has_value());
  CHECK(report.violated_degree->degree == 3);
}

TEST_CASE("scale_examples") {
  FractionalSolution half(4);
  for (int v = 0; v < 4; ++v) half.Set(v, (v + 1) % 4, ParseRational("1/2"));
  CHECK(Scale(half, 2) == Tour(4));
  CHECK(Scale(Tour(4), 1) == Tour(4));
  CHECK(CheckFeasible(Scale(ConstructFibonacci(3), ParseRational("3/2")), 3, LPVariant::kUnbounded));
  CHECK_THROWS_AS(Scale(Tour(4), 0), Error);
  CHECK_THROWS_AS(Scale(Tour(4), -1), Error);
}

TEST_CASE("scaling_equivalence") {
  std::mt19937_64 rng(23);
  int feasible = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    FractionalSolution x(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng() % 3) x.Set(u, v, oracle::RandomRational(rng, 2, 2));
      }
    }
    const bool base = CheckFeasible(x, 1, LPVariant::kUnbounded);
    feasible += base;
    for (int k : {2, 3, 5}) CHECK(CheckFeasible(Scale(x, k), k, LPVariant::kUnbounded) == base);
  }
  CHECK(feasible > 20);
}

TEST_CASE("solve_examples") {
  CutLPResult r = Solve({Complete(4), 2, LPVariant::kBounded});
  REQUIRE(r.feasible);
  CHECK(r.value == 4);

  MultiGraph c5(5);
  for (int v = 0; v < 5; ++v) c5.AddEdge(v, (v + 1) % 5, 1);
  r = Solve({c5, 2, LPVariant::kUnbounded});
  REQUIRE(r.feasible);
  CHECK(r.value == 5);
  for (const auto& [e, v] : r.solution.values()) CHECK(v == 1);

  r = Solve({Complete(5), 1, LPVariant::kUnbounded});
  REQUIRE(r.feasible);
  CHECK(r.value == ParseRational("5/2"));
  CHECK_FALSE(Separate(r.solution, 1).has_value());
}

TEST_CASE("solve_reports_infeasibility") {
  MultiGraph two(4);
  two.AddEdge(0, 1, 1);
  two.AddEdge(2, 3, 1);
  CutLPResult r = Solve({two, 1, LPVariant::kUnbounded});
  CHECK_FALSE(r.feasible);
  CHECK_FALSE(r.infeasibility_reason.empty());

  MultiGraph star(4);
  for (int v = 1; v < 4; ++v) star.AddEdge(0, v, 1);
  CHECK_FALSE(Solve({star, 2, LPVariant::kBounded}).feasible);
  CHECK_THROWS_AS(Solve({star, 0, LPVariant::kUnbounded}), Error);
}

TEST_CASE("solve_matches_vertex_enumeration_on_k4") {
  // Every cut row of the 4-vertex LP written out; the oracle lists all vertices.
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    MultiGraph g(4);
    for (int u = 0; u < 4; ++u) {
      for (int v = u + 1; v < 4; ++v) g.AddEdge(u, v, static_cast<long>(rng() % 5));
    }
    const int k = 1 + static_cast<int>(rng() % 3);
    for (LPVariant variant : {LPVariant::kUnbounded, LPVariant::kBounded}) {
      std::vector<oracle::Row> rows;
      for (std::uint64_t mask = 1; mask < 8; ++mask) {
        const CutSet s = CutSet::FromMask(4, mask << 1);
        std::vector<Rational> a;
        for (const auto& e : g.edges()) a.emplace_back(s.contains(e.u) != s.contains(e.v) ? 1 : 0);
        const bool singleton = s.count() == 1 || s.count() == 3;
        rows.push_back({a, variant == LPVariant::kBounded && singleton ? 0 : 1, Rational(k)});
      }
      if (variant == LPVariant::kBounded) {
        std::vector<Rational> a;
        for (const auto& e : g.edges()) a.emplace_back(e.u == 0 || e.v == 0 ? 1 : 0);
        rows.push_back({a, 0, Rational(k)});
      }
      Rational best;
      bool first = true;
      for (const auto& p : oracle::Vertices(rows, g.edge_count())) {
        Rational value;
        for (std::size_t j = 0; j < p.size(); ++j) value += g.edges()[j].cost * p[j];
        if (first || value < best) best = value;
        first = false;
      }
      const CutLPResult r = Solve({g, k, variant});
      REQUIRE(r.feasible);
      CHECK(r.value == best);
      CHECK(CheckFeasible(r.solution, k, variant));
    }
  }
}

TEST_CASE("solve_is_a_lower_bound_on_integral_multigraph_optimum") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 3);
    MultiGraph g(n);
    for (int v = 0; v < n; ++v) g.AddEdge(v, (v + 1) % n, static_cast<long>(1 + rng() % 4));
    for (int u = 0; u < n; ++u) {
      for (int v = u + 2; v < n; ++v) {
        if (rng() % 2 && !(u == 0 && v == n - 1)) g.AddEdge(u, v, static_cast<long>(1 + rng() % 4));
      }
    }
    const int k = 1 + static_cast<int>(rng() % 3);
    const CutLPResult r = Solve({g, k, LPVariant::kUnbounded});
    REQUIRE(r.feasible);
    auto integral = oracle::MinCostConnected(g, k, k, false);
    REQUIRE(integral.has_value());
    CHECK(r.value <= *integral);
  }
}

TEST_CASE("metric_detection") {
  CHECK(IsMetric(Complete(4)));
  MultiGraph tri(3);
  tri.AddEdge(0, 1, 1);
  tri.AddEdge(1, 2, 1);
  tri.AddEdge(0, 2, 5);
  CHECK_FALSE(IsMetric(tri));
  MultiGraph missing(3);
  missing.AddEdge(0, 1, 1);
  missing.AddEdge(1, 2, 1);
  CHECK_FALSE(IsMetric(missing));
  CHECK(IsMetric(Complete(3)));
}

TEST_CASE("parsimonious_compare_examples") {
  auto r = ParsimoniousCompare(Complete(4), 2);
  CHECK(r.opt_unbounded == 4);
  CHECK(r.opt_bounded == 4);
  r = ParsimoniousCompare(Complete(3), 2);
  CHECK(r.opt_unbounded == 3);
  CHECK(r.opt_bounded == 3);
  r = ParsimoniousCompare(Complete(5), 1);
  CHECK(r.opt_unbounded == ParseRational("5/2"));
  CHECK(r.opt_bounded == ParseRational("5/2"));

  MultiGraph tri(3);
  tri.AddEdge(0, 1, 1);
  tri.AddEdge(1, 2, 1);
  tri.AddEdge(0, 2, 5);
  try {
    ParsimoniousCompare(tri, 2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kDomain);
    CHECK(std::string(e.what()) == "parsimony requires metric costs");
  }
}

TEST_CASE("parsimony_on_random_metric_instances") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const int k = 1 + static_cast<int>(rng() % 3);
    const auto r = ParsimoniousCompare(RandomMetric(rng, n), k);
    CHECK(r.opt_bounded >= r.opt_unbounded);
    CHECK(r.opt_bounded == r.opt_unbounded);
  }
}
