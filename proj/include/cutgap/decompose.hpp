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

#ifndef CUTGAP_DECOMPOSE_HPP_
#define CUTGAP_DECOMPOSE_HPP_

#include <optional>
#include <string>

#include "cutgap/graph.hpp"
#include "cutgap/rational.hpp"

namespace cutgap {

struct SplitResult {
  bool feasible = false;
  // Copies of each edge entry given to each part; part_a + part_b = g.
  EdgeMultiset part_a;
  EdgeMultiset part_b;
  long nodes = 0;  // search nodes visited
};

// Decides whether g splits into an a-edge-connected and a b-edge-connected
// spanning subgraph. Exhaustive over per-entry copy counts with
// connectivity pruning; total multiplicity at most 30.
SplitResult SplitSearch(const MultiGraph& g, int a, int b);

struct LowerBoundWitness {
  bool verified = false;
  int connectivity = 0;
  // f(a, b) >= bound when verified.
  int bound = 0;
  std::optional<MinCut> violated_cut;   // g is not (a+b-1)-edge-connected
  std::optional<SplitResult> split;     // g splits after all
  std::string reason;
};

// Accepts g when it is (a+b-1)-edge-connected and does not split, which
// shows f(a, b) exceeds its edge connectivity.
LowerBoundWitness FLowerWitness(int a, int b, const MultiGraph& g);

// ceil((2^n (k+c) - c) / (t k)) * t / 2^n, checked against 1 + c/k + t/2^n.
Rational SplittingGapBound(int c, int k, int t, int n);

}  // namespace cutgap

#endif  // CUTGAP_DECOMPOSE_HPP_
