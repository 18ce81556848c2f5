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

#ifndef CUTGAP_REDUCTIONS_HPP_
#define CUTGAP_REDUCTIONS_HPP_

#include <array>
#include <cstddef>
#include <vector>

#include "cutgap/cutlp.hpp"
#include "cutgap/graph.hpp"

namespace cutgap {

// A tree T and a set X of vertex pairs; a subset Y of X is feasible when the
// tree paths of its pairs cover every tree edge.
struct PathCoverInstance {
  MultiGraph tree;
  std::vector<VertexPair> pairs;
};

// Throws unless tree is a simple spanning tree and every pair has two
// distinct endpoints in range.
void ValidatePathCover(const PathCoverInstance& inst);

// Indices of the tree edges on the path between the endpoints of pair.
std::vector<std::size_t> PathEdges(const PathCoverInstance& inst, VertexPair pair);

// y holds indices into inst.pairs. Computed both by path coverage and by
// 2-edge-connectivity of T plus Y; a disagreement throws std::logic_error.
bool PathCoverFeasible(const PathCoverInstance& inst, const std::vector<std::size_t>& y);

struct PathCoverOptimum {
  bool feasible = false;
  int size = 0;
  std::vector<std::size_t> witness;  // ascending pair indices
};

// Exact, by iterative deepening over the lowest uncovered tree edge.
// Requires |X| <= 24.
PathCoverOptimum PathCoverOpt(const PathCoverInstance& inst);

// Edge-connectivity instance with 0/1 costs whose optimum equals the path
// cover optimum. Multigraph form: each tree edge as k-1 zero-cost copies,
// each pair as a unit-cost edge. Simple form: vertex v becomes the clique
// v*(k+1) .. v*(k+1)+k, tree edge uv the matching (u_i, v_i) for i < k-1, and
// each pair the lexicographically first unused edge between the two cliques.
MultiGraph KecssFromPathCover(const PathCoverInstance& inst, int k, bool simple);

// Ground set {0..ground-1}; each triple lists three elements.
struct SetCoverInstance {
  int ground = 0;
  std::vector<std::array<int, 3>> triples;
};

// Throws naming the violated condition unless every triple has three distinct
// in-range elements and every element lies in exactly two triples.
void ValidateSetCover(const SetCoverInstance& sc);

// Root 0, element j at 1 + j, triple i at p = 1 + ground + 2i and q = p + 1.
PathCoverInstance SetCoverToPathCover(const SetCoverInstance& sc);

int SetCoverOpt(const SetCoverInstance& sc);

// Rewrites a witness of SetCoverToPathCover(sc) so that each triple
// contributes either its pair {p, q} or both of its other pairs, without
// growing it or losing feasibility; returns the triples of the second kind.
std::vector<std::size_t> SetCoverFromWitness(const SetCoverInstance& sc,
                                             std::vector<std::size_t>& witness);

}  // namespace cutgap

#endif  // CUTGAP_REDUCTIONS_HPP_
