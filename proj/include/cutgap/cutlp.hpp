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

#ifndef CUTGAP_CUTLP_HPP_
#define CUTGAP_CUTLP_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cutgap/graph.hpp"
#include "cutgap/rational.hpp"

namespace cutgap {

// Unordered vertex pair stored with first < second.
using VertexPair = std::pair<VertexId, VertexId>;
inline VertexPair MakePair(VertexId u, VertexId v) {
  return u < v ? VertexPair{u, v} : VertexPair{v, u};
}

// Support representation of an edge vector: only strictly positive entries
// are stored. Parallel graph edges are aggregated onto their vertex pair.
class FractionalSolution {
 public:
  explicit FractionalSolution(int n = 1);

  int vertex_count() const { return n_; }
  // Zero removes the entry; negative values are rejected.
  void Set(VertexId u, VertexId v, const Rational& value);
  void Add(VertexId u, VertexId v, const Rational& value);
  Rational Get(VertexId u, VertexId v) const;
  const std::map<VertexPair, Rational>& values() const { return values_; }
  std::size_t support_size() const { return values_.size(); }

  // x(delta(s)).
  Rational CutValue(const CutSet& s) const;
  // x(delta(s : t)) for disjoint s, t.
  Rational CrossValue(const CutSet& s, const CutSet& t) const;
  Rational Degree(VertexId v) const;
  // Support graph, unit costs, one entry per support pair.
  MultiGraph SupportGraph() const;
  // Dense symmetric weight matrix.
  std::vector<std::vector<Rational>> WeightMatrix() const;

  // Path of the graph this solution was computed on, if any.
  std::string graph_ref;

  bool operator==(const FractionalSolution& other) const {
    return n_ == other.n_ && values_ == other.values_;
  }

 private:
  int n_;
  std::map<VertexPair, Rational> values_;
};

enum class LPVariant {
  kUnbounded,  // cut constraints only
  kBounded,    // plus x(delta(v)) = k at every vertex
};

const char* ToString(LPVariant variant);

// One instance of the cut relaxation: min c.x subject to x(delta(S)) >= k for
// every proper S, x >= 0, and the degree equalities in the bounded variant.
struct CutLP {
  MultiGraph graph;
  int k = 2;
  LPVariant variant = LPVariant::kUnbounded;
};

struct CutViolation {
  CutSet cut;  // normalized to exclude the root
  Rational value;
};

// A minimum-weight cut with x(delta(S)) < k, or nullopt when x satisfies
// every cut constraint.
std::optional<CutViolation> Separate(const FractionalSolution& x, int k);
std::optional<CutViolation> Separate(const CutLP& lp, const FractionalSolution& x);

struct DegreeViolation {
  VertexId vertex;
  Rational degree;
};

struct FeasibilityReport {
  bool feasible = true;
  std::optional<CutViolation> violated_cut;
  std::optional<DegreeViolation> violated_degree;
};

FeasibilityReport CheckFeasibility(const FractionalSolution& x, int k, LPVariant variant);
bool CheckFeasible(const FractionalSolution& x, int k, LPVariant variant);

// Pointwise multiplication by a positive factor.
FractionalSolution Scale(const FractionalSolution& x, const Rational& factor);

struct CutLPResult {
  bool feasible = false;
  Rational value;
  FractionalSolution solution;
  std::vector<Rational> edge_values;  // per graph edge entry
  std::vector<CutSet> active_cuts;   // cut rows of the final restricted LP
  int rounds = 0;
  std::string infeasibility_reason;
};

// Exact optimum by cutting planes: start from the singleton cuts, add one
// minimum violated cut per round until separation finds none.
CutLPResult Solve(const CutLP& lp);

// Complete simple graph whose costs satisfy the triangle inequality.
bool IsMetric(const MultiGraph& g);

struct ParsimonyResult {
  Rational opt_unbounded;
  Rational opt_bounded;
};

// Optima of both variants on a metric instance; throws kDomain otherwise.
ParsimonyResult ParsimoniousCompare(const MultiGraph& g, int k);

}  // namespace cutgap

#endif  // CUTGAP_CUTLP_HPP_
