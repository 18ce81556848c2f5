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

#include <algorithm>
#include <numeric>
#include <random>

#include "cutgap/error.hpp"
#include "cutgap/graph.hpp"
#include "cutgap/graph_io.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cutgap;

namespace {

MultiGraph Complete(int n) {
  MultiGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.AddEdge(u, v, 1);
  }
  return g;
}

MultiGraph Cycle(int n) {
  MultiGraph g(n);
  for (int v = 0; v < n; ++v) g.AddEdge(v, (v + 1) % n, 1);
  return g;
}

MultiGraph RandomMultigraph(std::mt19937_64& rng, int n, int max_mult) {
  MultiGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const int m = static_cast<int>(rng() % (max_mult + 1));
      if (m > 0) g.AddEdge(u, v, static_cast<long>(rng() % 5), m);
    }
  }
  return g;
}

ErrorKind KindOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::kInvalidArgument;
}

}  // namespace

TEST_CASE("graph_basics") {
  MultiGraph g(3);
  g.AddEdge(0, 1, 2, 2);
  g.AddEdge(1, 2, 1);
  g.AddEdge(0, 1, 1);
  CHECK(g.edge_count() == 3);
  CHECK(g.TotalMultiplicity() == 4);
  CHECK(g.TotalCost() == 6);
  CHECK(g.Degree(1) == 4);
  CHECK_FALSE(g.IsSimple());
  CHECK(g.MultiplicityMatrix()[0][1] == 3);
  CHECK(Complete(4).IsSimple());
}

TEST_CASE("graph_rejects_bad_edges") {
  MultiGraph g(3);
  CHECK(KindOf([&] { g.AddEdge(0, 0); }) == ErrorKind::kInvalidArgument);
  CHECK(KindOf([&] { g.AddEdge(0, 3); }) == ErrorKind::kInvalidArgument);
  CHECK(KindOf([&] { g.AddEdge(0, 1, -1); }) == ErrorKind::kInvalidArgument);
  CHECK(KindOf([&] { g.AddEdge(0, 1, 1, 0); }) == ErrorKind::kInvalidArgument);
  CHECK(KindOf([] { MultiGraph(0); }) == ErrorKind::kInvalidArgument);
}

TEST_CASE("cut_set_operations") {
  CutSet a(5, {1, 2});
  CutSet b(5, {2, 3});
  CHECK(a.count() == 2);
  CHECK(a.IsProper());
  CHECK(a.Crosses(b));
  CHECK(a.Union(b) == CutSet(5, {1, 2, 3}));
  CHECK(a.Intersection(b) == CutSet(5, {2}));
  CHECK(CutSet(5, {0, 1}).Normalized() == CutSet(5, {2, 3, 4}));
  CHECK_FALSE(CutSet(5).IsProper());
  CHECK_FALSE(CutSet(5, {0, 1, 2, 3, 4}).IsProper());
  CHECK(CutSet(5, {1}).IsSubsetOf(a));
  CHECK_FALSE(CutSet(5, {1}).Crosses(a));
  CHECK(CutSet::FromMask(5, 0b110) == a);
  CHECK(a.Members() == std::vector<VertexId>{1, 2});
  CutSet wide(100, {3, 70, 99});
  CHECK(wide.count() == 3);
  CHECK(wide.Complement().count() == 97);
  CHECK(wide.contains(70));
}

TEST_CASE("cut_edges_reject_improper_sets") {
  MultiGraph g = Complete(4);
  CHECK(CutSize(g, CutSet(4, {0})) == 3);
  CHECK(CutSize(g, CutSet(4, {0, 1})) == 4);
  CHECK(KindOf([&] { CutSize(g, CutSet(4)); }) == ErrorKind::kInvalidArgument);
  CHECK(KindOf([&] { CutSize(g, CutSet(3, {0})); }) == ErrorKind::kInvalidArgument);
}

TEST_CASE("edge_connectivity_examples") {
  CHECK(EdgeConnectivity(Complete(4)) == 3);
  CHECK(EdgeConnectivity(Cycle(5)) == 2);
  MultiGraph two(4);
  two.AddEdge(0, 1);
  two.AddEdge(2, 3);
  CHECK(EdgeConnectivity(two) == 0);
  CHECK_FALSE(IsConnected(two));
  MultiGraph doubled(2);
  doubled.AddEdge(0, 1, 1, 3);
  CHECK(EdgeConnectivity(doubled) == 3);
  CHECK(IsKEdgeConnected(doubled, 3));
  CHECK_FALSE(IsKEdgeConnected(doubled, 4));
}

TEST_CASE("edge_connectivity_matches_brute_force") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    MultiGraph g = RandomMultigraph(rng, n, 3);
    const long expected = oracle::CutConnectivity(g);
    CHECK(EdgeConnectivity(g) == expected);
    std::vector<Rational> weights;
    for (const auto& e : g.edges()) weights.emplace_back(e.multiplicity);
    MinCut cut = GlobalMinCut(g, weights);
    CHECK(cut.value == expected);
    CHECK(CutSize(g, cut.side) == expected);
    CHECK_FALSE(cut.side.contains(kRoot));
  }
}

TEST_CASE("vertex_connectivity") {
  CHECK(IsKVertexConnected(Complete(5), 4));
  CHECK_FALSE(IsKVertexConnected(Complete(5), 5));
  CHECK(IsKVertexConnected(Cycle(6), 2));
  CHECK_FALSE(IsKVertexConnected(Cycle(6), 3));
}

TEST_CASE("canonical_label_is_permutation_invariant") {
  std::mt19937_64 rng(5);
  int checks = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    MultiGraph g = RandomMultigraph(rng, n, 2);
    const std::string label = CanonicalLabel(g);
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int p = 0; p < 6; ++p) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(CanonicalLabel(Relabel(g, perm)) == label);
      ++checks;
    }
  }
  CHECK(checks >= 100);
}

TEST_CASE("canonical_label_separates_non_isomorphic_graphs") {
  MultiGraph path(4);
  path.AddEdge(0, 1);
  path.AddEdge(1, 2);
  path.AddEdge(2, 3);
  MultiGraph star(4);
  star.AddEdge(0, 1);
  star.AddEdge(0, 2);
  star.AddEdge(0, 3);
  CHECK(CanonicalLabel(path) != CanonicalLabel(star));
  // Same degree sequence: the 6-cycle and two triangles.
  MultiGraph triangles(6);
  for (int b : {0, 3}) {
    triangles.AddEdge(b, b + 1);
    triangles.AddEdge(b + 1, b + 2);
    triangles.AddEdge(b, b + 2);
  }
  CHECK(CanonicalLabel(Cycle(6)) != CanonicalLabel(triangles));
  CHECK(KindOf([] { CanonicalLabel(Complete(14)); }) == ErrorKind::kBoundExceeded);
}

TEST_CASE("graph_json_round_trip") {
  MultiGraph g(3);
  g.AddEdge(0, 1, ParseRational("3/2"), 2);
  g.AddEdge(1, 2, 0);
  const std::string text = GraphToJson(g);
  const MultiGraph back = ParseGraphJson(text);
  CHECK(GraphToJson(back) == text);
  CHECK(back.edges()[0].cost == ParseRational("3/2"));
  CHECK(back.edges()[0].multiplicity == 2);
}

TEST_CASE("edge_list_parsing") {
  const MultiGraph g = ParseEdgeList("# comment\nn 3\n0 1 1/2\n1 2 1 3\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.edges()[1].multiplicity == 3);
  CHECK(ParseGraph("0 1 1\n1 2 1\n").vertex_count() == 3);
  CHECK(ParseGraph("{\"n\":2,\"edges\":[{\"u\":0,\"v\":1}]}").edges()[0].cost == 0);
}

TEST_CASE("graph_parse_errors_name_the_field") {
  auto message = [](std::string_view text) {
    try {
      ParseGraph(text);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kParse);
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("{\"n\":3,\"edges\":[{\"u\":0,\"v\":1},{\"u\":1,\"v\":2,\"cost\":\"0.5\"}]}")
            .find("edges[1]") != std::string::npos);
  CHECK(message("{\"n\":2,\"edges\":[{\"u\":0,\"v\":5}]}").find("out of range") != std::string::npos);
  CHECK(message("{\"n\":2,\"edges\":[{\"u\":1,\"v\":1}]}").find("self-loop") != std::string::npos);
  CHECK(message("{\"edges\":[]}").find("\"n\"") != std::string::npos);
  CHECK(message("{\"n\":2,\"edges\":[{\"u\":0,\"v\":1,\"mult\":0}]}").find("mult") != std::string::npos);
  CHECK(message("{\"n\":2,\"edges\":[{\"u\":0,\"v\":1,\"cost\":\"-1\"}]}").find("nonnegative") !=
        std::string::npos);
  CHECK(message("{not json").find("JSON") != std::string::npos);
  CHECK(message("0 1 x\n").find("line") != std::string::npos);
  CHECK(message("n 2\n0 5 1\n").find("exceeds") != std::string::npos);
  CHECK(message("").find("empty") != std::string::npos);
  CHECK(KindOf([] { ReadGraphFile("/nonexistent/graph.json"); }) == ErrorKind::kParse);
}

TEST_CASE("stoer_wagner_on_weighted_matrix") {
  std::vector<std::vector<long>> w{{0, 5, 1, 0}, {5, 0, 0, 1}, {1, 0, 0, 5}, {0, 1, 5, 0}};
  auto [side, value] = StoerWagner(w);
  CHECK(value == 2);
  std::sort(side.begin(), side.end());
  CHECK((side == std::vector<VertexId>{0, 1} || side == std::vector<VertexId>{2, 3}));
}

TEST_CASE("dot_output_lists_every_copy") {
  MultiGraph g(2);
  g.AddEdge(0, 1, 1, 2);
  const std::string dot = ToDot(g);
  CHECK(dot.find("graph G {") == 0);
  std::size_t copies = 0;
  for (std::size_t p = dot.find("0 -- 1"); p != std::string::npos; p = dot.find("0 -- 1", p + 1)) ++copies;
  CHECK(copies == 2);
}
