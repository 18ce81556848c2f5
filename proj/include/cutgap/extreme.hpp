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

#ifndef CUTGAP_EXTREME_HPP_
#define CUTGAP_EXTREME_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cutgap/cutlp.hpp"
#include "cutgap/graph.hpp"
#include "cutgap/rational.hpp"

namespace cutgap {

// F_1 = F_2 = 1.
Integer Fibonacci(int i);

// The 2t-vertex extreme point of the degree-bounded relaxation at k = 2 with
// fractionality 1/F_t. Vertex i of the 1-based listing is id i - 1 here.
FractionalSolution ConstructFibonacci(int t);

struct LaminarFamily {
  int n = 0;
  std::vector<CutSet> sets;  // normalized: none contains the root

  // Pairwise disjoint or nested.
  bool IsLaminar() const;
};

// The 4t - 3 sets {i}, {2i-1, 2i} and {1..2i} (2 <= i <= t-2), normalized.
LaminarFamily CanonicalLaminarFamily(int t);

struct SolutionStats {
  Rational fractionality;  // min positive entry; 0 for the empty vector
  Integer denominator;     // least d with d*x integral
  int max_support_degree = 0;
  int n = 0;
  int support_edges = 0;
};

SolutionStats Stats(const FractionalSolution& x);

// x(delta(S : T)) for disjoint S, T.
Rational TightCrossValue(const FractionalSolution& x, const CutSet& s, const CutSet& t);

// Every normalized proper cut S (root excluded) with x(delta(S)) == k,
// ordered by bitset value. Requires n <= max_n.
std::vector<CutSet> TightCuts(const FractionalSolution& x, const Rational& k, int max_n = 24);

enum class VerifyStage {
  kCertified,
  kInfeasible,  // a degree equality or a cut constraint fails
  kNotUnique,   // feasible, but the tight system leaves a direction free
};

const char* ToString(VerifyStage stage);

struct ExtremenessCertificate {
  LaminarFamily tight_family;         // maximal laminar subfamily of the tight sets
  std::vector<CutSet> tight_cuts;     // all tight normalized cuts found
  std::vector<VertexPair> variables;  // support order used for the tight system
  std::size_t tight_rows = 0;
  std::size_t rank = 0;               // equals variables.size()
  std::size_t laminar_rank = 0;
  Rational min_cut_value;             // separation transcript
  CutSet min_cut;
  bool used_family_hint = false;
};

struct ExtremenessRefutation {
  VerifyStage stage = VerifyStage::kInfeasible;
  std::optional<CutViolation> violated_cut;
  std::optional<DegreeViolation> violated_degree;
  // kNotUnique: x = (plus + minus) / 2 with both feasible and distinct.
  std::optional<FractionalSolution> plus;
  std::optional<FractionalSolution> minus;
  std::size_t rank = 0;
  std::size_t variables = 0;
};

struct ExtremenessResult {
  bool extreme = false;
  std::optional<ExtremenessCertificate> certificate;
  std::optional<ExtremenessRefutation> refutation;
};

// Decides whether x is an extreme point of the degree-bounded relaxation at k:
// feasibility by separation and degree sums, then uniqueness of x in the
// system of all tight constraints over the support. When `hint` is given and
// all its sets are tight with full rank, uniqueness is read off the hint and
// the cut enumeration is skipped.
ExtremenessResult VerifyExtreme(const FractionalSolution& x, int k,
                                const LaminarFamily* hint = nullptr);

// Enumeration of extreme points of the degree-bounded relaxation at k = 2 on
// small vertex counts.
struct EnumerationFilters {
  Integer min_denominator = 1;
  int min_max_degree = 0;
  bool require_three_connected = true;
  int max_n = 7;
};

struct ExtremePointClass {
  FractionalSolution x;
  SolutionStats stats;
  std::string label;  // canonical up to isomorphism, values included
};

struct EnumerationResult {
  int n = 0;
  std::vector<ExtremePointClass> classes;  // after filtering
  long candidate_graphs = 0;
  long extreme_points = 0;  // distinct classes before filtering
};

EnumerationResult EnumerateExtremePoints(int n, const EnumerationFilters& filters = {});

// Support graphs on n vertices: min degree >= 3, at most 2n - 3 edges,
// optionally 3-vertex-connected; one representative per isomorphism class.
std::vector<MultiGraph> CandidateSupportGraphs(int n, bool require_three_connected);

// All extreme points of the degree-bounded relaxation at k = 2 whose support
// is exactly the edge set of `support`.
std::vector<FractionalSolution> ExtremePointsWithSupport(const MultiGraph& support);

// Isomorphism-invariant label of a solution (edge values included).
std::string SolutionLabel(const FractionalSolution& x, int max_vertices = 12);

// Arc-valued vector on the complete digraph.
class DirectedSolution {
 public:
  explicit DirectedSolution(int n = 1);
  int vertex_count() const { return n_; }
  void Set(VertexId from, VertexId to, const Rational& value);
  Rational Get(VertexId from, VertexId to) const;
  const std::map<std::pair<VertexId, VertexId>, Rational>& values() const { return values_; }
  // y(delta_out(u)).
  Rational OutValue(const CutSet& u) const;
  bool operator==(const DirectedSolution& other) const = default;

 private:
  int n_;
  std::map<std::pair<VertexId, VertexId>, Rational> values_;
};

// y_(u,v) = y_(v,u) = x_uv / 2. Requires x feasible for the unbounded
// relaxation at k = 2.
DirectedSolution LiftToDirected(const FractionalSolution& x);
FractionalSolution DropDirections(const DirectedSolution& y);

// Some U with y(delta_out(U)) < 1, by enumeration of all proper subsets.
std::optional<CutSet> ViolatedDirectedCut(const DirectedSolution& y, int max_n = 20);

struct DirectedFaceResult {
  DirectedSolution y;
  Rational min_positive;
  int attempts = 0;
  std::size_t rank = 0;
};

// An extreme point of {y feasible for the directed cut relaxation : y drops
// to x}. Weights 1/(i+2) over arcs in order; on failure, seeded random
// weights.
DirectedFaceResult DirectedFaceExtreme(const FractionalSolution& x, std::uint64_t seed = 1);

}  // namespace cutgap

#endif  // CUTGAP_EXTREME_HPP_
