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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "cutgap/cutlp.hpp"
#include "cutgap/decompose.hpp"
#include "cutgap/extreme.hpp"
#include "cutgap/gap.hpp"
#include "cutgap/metric.hpp"
#include "cutgap/reductions.hpp"
#include "cutgap/report.hpp"
#include "oracles.hpp"

using namespace cutgap;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void Expect(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

int failures = 0;

void Criterion(int id, const std::string& name, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail << "exception: " << e.what() << "; ";
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (out.pass ? "PASS" : "FAIL") << " [" << id << "] " << name << " ("
            << out.detail.str() << seconds << " s)" << std::endl;
  failures += !out.pass;
}

MultiGraph Complete(int n, Rational cost = 1) {
  MultiGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.AddEdge(u, v, cost);
  }
  return g;
}

MultiGraph RandomMetric(std::mt19937_64& rng, int n) {
  MultiGraph g(n);
  for (int v = 1; v < n; ++v) g.AddEdge(static_cast<int>(rng() % v), v, static_cast<long>(1 + rng() % 6));
  for (int extra = 0; extra < n; ++extra) {
    const int u = static_cast<int>(rng() % n);
    const int v = static_cast<int>(rng() % n);
    if (u != v) g.AddEdge(u, v, static_cast<long>(1 + rng() % 6));
  }
  return ComputeMetricClosure(g).complete;
}

std::vector<bool> ZeroCost(const MultiGraph& g) {
  std::vector<bool> forced;
  for (const auto& e : g.edges()) forced.push_back(e.cost == 0);
  return forced;
}

std::vector<FractionalSolution> RegressionSet() {
  std::vector<FractionalSolution> out;
  for (int t = 3; t <= 8; ++t) out.push_back(ConstructFibonacci(t));
  for (const auto& ex : SmallExtremeExamples()) out.push_back(ex.x);
  return out;
}

void FibonacciCertification(Outcome& out) {
  const auto start = std::chrono::steady_clock::now();
  for (int t = 3; t <= 8; ++t) {
    const FractionalSolution x = ConstructFibonacci(t);
    const std::string at = "t=" + std::to_string(t);
    out.Expect(VerifyExtreme(x, 2).extreme, at + " certified");
    const SolutionStats s = Stats(x);
    out.Expect(s.fractionality == Rational(1) / Rational(Fibonacci(t)), at + " fractionality");
    out.Expect(s.denominator == Fibonacci(t), at + " denominator");
    out.Expect(s.max_support_degree == t, at + " max degree");
    out.Expect(s.n == 2 * t, at + " vertices");
    out.Expect(s.support_edges == 4 * t - 3, at + " edges");
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.Expect(seconds < 30, "runtime under 30 s");
  out.detail << "t=3..8 certified, stats exact; ";
}

void GapRegression(Outcome& out) {
  const std::map<int, std::string> expected{{3, "9/8"}, {4, "23/21"}, {5, "22/20"}, {6, "35/32"}};
  for (const auto& [t, text] : expected) {
    const Rational want = ParseRational(text);
    const Rational got = DominationGap(ConstructFibonacci(t)).t;
    out.Expect(got == want, "t=" + std::to_string(t) + " gap " + ToString(got) + " != " + text);
    out.detail << "t=" << t << ": " << ToString(got) << "; ";
  }
}

void UniqueDenominatorTwo(Outcome& out) {
  EnumerationFilters filters;
  filters.min_denominator = 2;
  std::vector<ExtremePointClass> found;
  for (int n = 3; n <= 6; ++n) {
    const EnumerationResult r = EnumerateExtremePoints(n, filters);
    out.detail << "n=" << n << ": " << r.classes.size() << "; ";
    found.insert(found.end(), r.classes.begin(), r.classes.end());
  }
  out.Expect(found.size() == 1, "exactly one class over n <= 6");
  if (found.size() != 1) return;
  std::map<Rational, int> multiset;
  for (const auto& [e, v] : found[0].x.values()) ++multiset[v];
  const std::map<Rational, int> want{{Rational(1), 3}, {ParseRational("1/2"), 6}};
  out.Expect(multiset == want, "value multiset {1 x3, 1/2 x6}");
  out.Expect(found[0].label == SolutionLabel(ConstructFibonacci(3)), "isomorphic to the t=3 construction");
}

void DirectedFractionality(Outcome& out) {
  const Rational a = DirectedFaceExtreme(ConstructFibonacci(3)).min_positive;
  const Rational b = DirectedFaceExtreme(ConstructFibonacci(4)).min_positive;
  out.Expect(a == ParseRational("1/2"), "t=3 min arc " + ToString(a));
  out.Expect(b == ParseRational("1/3"), "t=4 min arc " + ToString(b));
  out.detail << "t=3: " << ToString(a) << ", t=4: " << ToString(b) << "; ";
}

void Parsimony(Outcome& out) {
  std::mt19937_64 rng(1001);
  int instances = 0;
  for (int trial = 0; trial < 54; ++trial) {
    const int n = 3 + trial % 6;
    const int k = 1 + trial % 3;
    const ParsimonyResult r = ParsimoniousCompare(RandomMetric(rng, n), k);
    out.Expect(r.opt_unbounded == r.opt_bounded,
               "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + ToString(r.opt_unbounded) +
                   " vs " + ToString(r.opt_bounded));
    ++instances;
  }
  out.detail << instances << " metric instances, n=3..8, k=1..3; ";
}

void ScalingEquivalence(Outcome& out) {
  std::mt19937_64 rng(1002);
  int vectors = 0;
  int feasible = 0;
  for (int trial = 0; trial < 240; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    FractionalSolution x(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng() % 3) x.Set(u, v, oracle::RandomRational(rng, 2, 3));
      }
    }
    const bool base = CheckFeasible(x, 1, LPVariant::kUnbounded);
    out.Expect(base == (oracle::MinCutValue(x) >= 1), "feasibility agrees with cut enumeration");
    feasible += base;
    for (int k : {2, 3, 5}) {
      out.Expect(CheckFeasible(Scale(x, k), k, LPVariant::kUnbounded) == base, "scaled feasibility");
    }
    ++vectors;
  }
  out.detail << vectors << " vectors (" << feasible << " feasible) x k in {2,3,5}; ";
}

void ConversionSoundness(Outcome& out) {
  std::mt19937_64 rng(1003);
  int runs = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 6;
    const MultiGraph g = RandomMetric(rng, n);
    EdgeMultiset f(g.edge_count(), 0);
    for (int v = 1; v < n; ++v) {
      const int u = static_cast<int>(rng() % v);
      for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edges()[i];
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) f[i] += 2;
      }
    }
    for (int extra = 0; extra < 3; ++extra) ++f[rng() % f.size()];
    const ConversionResult r = EcsmToEcss(g, f);
    bool simple = true;
    for (int c : r.edges) simple = simple && (c == 0 || c == 1);
    out.Expect(simple, "output is simple");
    out.Expect(oracle::CutConnectivity(SubgraphOf(g, r.edges)) >= 2, "output is 2-edge-connected");
    out.Expect(MultisetCost(g, r.edges) <= MultisetCost(g, f), "cost does not increase");
    ++runs;
  }
  for (int n = 3; n <= 6; ++n) {
    const MultiGraph unit = Complete(n);
    const auto multi = oracle::MinCostConnected(unit, 2, 2, false);
    const auto simple = oracle::MinCostConnected(unit, 2, 1, false);
    out.Expect(multi.has_value() && multi == simple, "unit metric n=" + std::to_string(n));
    out.detail << "unit K" << n << ": " << ToString(*multi) << "; ";
  }
  int metric = 0;
  for (int trial = 0; trial < 12; ++trial) {
    const MultiGraph g = RandomMetric(rng, 4 + trial % 3);
    out.Expect(oracle::MinCostConnected(g, 2, 2, false) == oracle::MinCostConnected(g, 2, 1, false),
               "random metric optimum equality");
    ++metric;
  }
  out.detail << metric << " random metric optima equal; " << runs << " random conversions; ";
}

void ReductionChain(Outcome& out) {
  std::vector<SetCoverInstance> all;
  for (int k = 1; k <= 4; ++k) {
    for (const auto& sc : oracle::AllSetCoverInstances(k)) all.push_back(sc);
  }
  for (const auto& sc : all) {
    const int k = static_cast<int>(sc.triples.size());
    const PathCoverOptimum opt = PathCoverOpt(SetCoverToPathCover(sc));
    out.Expect(opt.feasible && opt.size == k + SetCoverOpt(sc), "path cover optimum equals k plus set cover optimum");
  }
  out.detail << all.size() << " set-cover instances; ";

  std::vector<PathCoverInstance> gadgets;
  for (const auto& sc : all) gadgets.push_back(SetCoverToPathCover(sc));
  std::mt19937_64 rng(1004);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    PathCoverInstance inst{MultiGraph(n), {}};
    for (int v = 1; v < n; ++v) inst.tree.AddEdge(static_cast<int>(rng() % v), v);
    const int pairs = 1 + static_cast<int>(rng() % 12);
    for (int i = 0; i < pairs; ++i) {
      const int u = static_cast<int>(rng() % n);
      int v = static_cast<int>(rng() % (n - 1));
      if (v >= u) ++v;
      inst.pairs.push_back(MakePair(u, v));
    }
    gadgets.push_back(inst);
  }
  int compared = 0;
  for (const auto& inst : gadgets) {
    if (inst.pairs.size() > 12) continue;
    const PathCoverOptimum opt = PathCoverOpt(inst);
    for (int k : {2, 3}) {
      const MultiGraph g = KecssFromPathCover(inst, k, false);
      const auto cost = oracle::MinCostConnected(g, k, k, true, ZeroCost(g));
      out.Expect(cost.has_value() == opt.feasible && (!cost || *cost == opt.size),
                 "k-ECSS cost equals path cover optimum");
      ++compared;
    }
  }
  // The zero-cost pruning itself, checked on the smallest gadget.
  const MultiGraph smallest = KecssFromPathCover(gadgets.front(), 2, false);
  out.Expect(oracle::MinCostConnected(smallest, 2, 2, true) ==
                 oracle::MinCostConnected(smallest, 2, 2, true, ZeroCost(smallest)),
             "pruning is exact on the smallest gadget");
  out.detail << compared << " k-ECSS comparisons; ";
}

void PathCoverEquivalence(Outcome& out) {
  std::mt19937_64 rng(1005);
  int cases = 0;
  int disagreements = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    PathCoverInstance inst{MultiGraph(n), {}};
    for (int v = 1; v < n; ++v) inst.tree.AddEdge(static_cast<int>(rng() % v), v);
    const int pairs = 1 + static_cast<int>(rng() % 10);
    for (int i = 0; i < pairs; ++i) {
      const int u = static_cast<int>(rng() % n);
      int v = static_cast<int>(rng() % (n - 1));
      if (v >= u) ++v;
      inst.pairs.push_back(MakePair(u, v));
    }
    for (int draw = 0; draw < 4; ++draw) {
      std::vector<std::size_t> y;
      for (std::size_t i = 0; i < inst.pairs.size(); ++i) {
        if (rng() % 3) y.push_back(i);
      }
      std::vector<bool> hit(inst.tree.edge_count(), false);
      for (std::size_t i : y) {
        for (std::size_t e : PathEdges(inst, inst.pairs[i])) hit[e] = true;
      }
      const bool covers = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
      MultiGraph g = inst.tree;
      for (std::size_t i : y) g.AddEdge(inst.pairs[i].first, inst.pairs[i].second);
      const bool connected = oracle::CutConnectivity(g) >= 2;
      disagreements += covers != connected;
      disagreements += PathCoverFeasible(inst, y) != covers;
      ++cases;
    }
  }
  out.Expect(cases >= 1000, "at least 1000 cases");
  out.Expect(disagreements == 0, std::to_string(disagreements) + " disagreements");
  out.detail << cases << " cases, " << disagreements << " disagreements; ";
}

void TightSetLemma(Outcome& out) {
  long triples = 0;
  int solutions = 0;
  for (const auto& x : RegressionSet()) {
    if (!VerifyExtreme(x, 2).extreme) {
      out.Expect(false, "regression solution not certified");
      continue;
    }
    ++solutions;
    std::vector<CutSet> tight;
    for (const auto& s : TightCuts(x, 2)) {
      tight.push_back(s);
      tight.push_back(s.Complement());
    }
    std::sort(tight.begin(), tight.end());
    for (const auto& s : tight) {
      for (const auto& t : tight) {
        if (s.Intersects(t)) continue;
        const CutSet u = s.Union(t);
        if (u.count() == x.vertex_count() || !std::binary_search(tight.begin(), tight.end(), u)) continue;
        out.Expect(TightCrossValue(x, s, t) == 1, "cross value is 1");
        ++triples;
      }
    }
  }
  out.detail << solutions << " certified solutions, " << triples << " tight triples; ";
}

void SplittingWitnesses(Outcome& out) {
  MultiGraph k33(6);
  for (int u = 0; u < 3; ++u) {
    for (int v = 3; v < 6; ++v) k33.AddEdge(u, v);
  }
  const LowerBoundWitness w1 = FLowerWitness(1, 1, k33);
  out.Expect(w1.verified && w1.bound == 4, "K3,3 certifies f(1,1) >= 4");
  MultiGraph c3(3);
  c3.AddEdge(0, 1);
  c3.AddEdge(1, 2);
  c3.AddEdge(0, 2);
  const LowerBoundWitness w2 = FLowerWitness(1, 1, c3);
  out.Expect(w2.verified && w2.bound == 3, "C3 certifies f(1,1) >= 3");
  const MultiGraph k4 = Complete(4);
  const SplitResult s = SplitSearch(k4, 1, 1);
  bool verified = s.feasible;
  if (s.feasible) {
    for (std::size_t i = 0; i < k4.edge_count(); ++i) {
      verified = verified && s.part_a[i] + s.part_b[i] == k4.edges()[i].multiplicity;
    }
    verified = verified && oracle::CutConnectivity(SubgraphOf(k4, s.part_a)) >= 1 &&
               oracle::CutConnectivity(SubgraphOf(k4, s.part_b)) >= 1;
  }
  out.Expect(verified, "K4 splits with a verified partition");

  // Corpus: named graphs plus random multigraphs, kept when 4-edge-connected.
  std::vector<MultiGraph> corpus{Complete(5)};
  MultiGraph octahedron(6);
  for (int u = 0; u < 6; ++u) {
    for (int v = u + 1; v < 6; ++v) {
      if (v != u + 3) octahedron.AddEdge(u, v);
    }
  }
  corpus.push_back(octahedron);
  for (int n = 2; n <= 6; ++n) {
    MultiGraph doubled(n);
    for (int v = 0; v + 1 < n; ++v) doubled.AddEdge(v, v + 1, 0, 4);
    corpus.push_back(doubled);
  }
  std::mt19937_64 rng(1006);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    MultiGraph g(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        const int m = static_cast<int>(rng() % 4);
        if (m > 0) g.AddEdge(u, v, 0, m);
      }
    }
    corpus.push_back(g);
  }
  int tested = 0;
  for (const auto& g : corpus) {
    if (g.TotalMultiplicity() > 20 || oracle::CutConnectivity(g) < 4) continue;
    ++tested;
    const SplitResult r = SplitSearch(g, 1, 1);
    bool ok = r.feasible;
    if (ok) {
      ok = oracle::CutConnectivity(SubgraphOf(g, r.part_a)) >= 1 &&
           oracle::CutConnectivity(SubgraphOf(g, r.part_b)) >= 1;
    }
    out.Expect(ok, "4-edge-connected multigraph splits for (1,1)");
  }
  out.Expect(tested >= 100, "corpus has at least 100 graphs");
  out.detail << tested << " 4-edge-connected multigraphs split; ";
}

void BoundArithmetic(Outcome& out) {
  int tuples = 0;
  for (int c = 0; c <= 5; ++c) {
    for (int k = 1; k <= 6; ++k) {
      for (int t = 1; t <= 4; ++t) {
        for (int n = 0; n <= 16; ++n) {
          const Rational value = SplittingGapBound(c, k, t, n);
          const Rational limit = 1 + Rational(c) / k + Rational(t) / Rational(Integer(1) << n);
          out.Expect(value <= limit, "bound within 1 + c/k + t/2^n");
          ++tuples;
        }
      }
    }
  }
  out.Expect(tuples >= 1000, "at least 1000 tuples");
  out.detail << tuples << " tuples; ";
}

}  // namespace

int main() {
  Criterion(1, "Fibonacci family certification", FibonacciCertification);
  Criterion(2, "Domination gap regression", GapRegression);
  Criterion(3, "Unique denominator >= 2 class for n <= 6", UniqueDenominatorTwo);
  Criterion(4, "Directed face fractionality", DirectedFractionality);
  Criterion(5, "Parsimonious property on metric instances", Parsimony);
  Criterion(6, "Scaling equivalence", ScalingEquivalence);
  Criterion(7, "Multigraph to simple conversion soundness", ConversionSoundness);
  Criterion(8, "Reduction chain", ReductionChain);
  Criterion(9, "Path cover coverage equals 2-edge-connectivity", PathCoverEquivalence);
  Criterion(10, "Tight-set lemma", TightSetLemma);
  Criterion(11, "Splitting witnesses", SplittingWitnesses);
  Criterion(12, "Splitting bound arithmetic", BoundArithmetic);
  std::cout << (failures == 0 ? "ALL PASS" : "FAILURES: " + std::to_string(failures)) << std::endl;
  return failures == 0 ? 0 : 1;
}
