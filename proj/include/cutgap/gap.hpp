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

#ifndef CUTGAP_GAP_HPP_
#define CUTGAP_GAP_HPP_

#include <utility>
#include <vector>

#include "cutgap/cutlp.hpp"
#include "cutgap/graph.hpp"
#include "cutgap/rational.hpp"

namespace cutgap {

struct CycleColumn {
  std::vector<VertexId> cycle;  // starts at vertex 0

  // The n pairs of consecutive vertices, sorted.
  std::vector<VertexPair> Edges() const;
  bool Uses(VertexId u, VertexId v) const;
  bool operator==(const CycleColumn& other) const = default;
};

struct GapResult {
  Rational t;
  // Weights are positive and sum to t.
  std::vector<std::pair<CycleColumn, Rational>> combination;
  int columns = 0;     // size of the final restricted master
  int iterations = 0;  // pricing rounds
};

struct TspTour {
  Rational cost;
  CycleColumn tour;
};

// Exact minimum-cost Hamiltonian cycle on 3 <= n <= 16 vertices of the
// complete graph; costs is a symmetric n x n matrix and may be negative.
TspTour TspMinCycle(const std::vector<std::vector<Rational>>& costs);

GapResult DominationGap(const FractionalSolution& x);

}  // namespace cutgap

#endif  // CUTGAP_GAP_HPP_
