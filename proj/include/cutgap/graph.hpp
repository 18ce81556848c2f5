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

#ifndef CUTGAP_GRAPH_HPP_
#define CUTGAP_GRAPH_HPP_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cutgap/error.hpp"
#include "cutgap/rational.hpp"

namespace cutgap {

// Dense vertex index in [0, n). Vertex 0 is the root used to normalize cuts.
using VertexId = int;
inline constexpr VertexId kRoot = 0;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Rational cost;
  int multiplicity = 1;
};

// Undirected multigraph. Parallel edges may appear as repeated entries or as
// multiplicity > 1 on one entry; self-loops are rejected.
class MultiGraph {
 public:
  explicit MultiGraph(int n = 1);

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  // Returns the index of the new entry.
  std::size_t AddEdge(VertexId u, VertexId v, Rational cost = 0, int multiplicity = 1);

  // Sum of multiplicities.
  long TotalMultiplicity() const;
  Rational TotalCost() const;

  // Weighted degree counting multiplicity.
  long Degree(VertexId v) const;

  // Adjacency matrix of summed multiplicities.
  std::vector<std::vector<long>> MultiplicityMatrix() const;

  bool IsSimple() const;

 private:
  void CheckVertex(VertexId v) const;

  int n_;
  std::vector<Edge> edges_;
};

// Vertex subset stored as a bitset of width n.
class CutSet {
 public:
  explicit CutSet(int n = 0);
  CutSet(int n, std::initializer_list<VertexId> members);
  static CutSet FromMembers(int n, std::span<const VertexId> members);
  // Bit i of mask selects vertex i; requires n <= 64.
  static CutSet FromMask(int n, std::uint64_t mask);

  int universe() const { return n_; }
  bool contains(VertexId v) const {
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
  }
  void insert(VertexId v) { words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(VertexId v) { words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int count() const;
  bool empty() const { return count() == 0; }
  // Nonempty and not the whole vertex set.
  bool IsProper() const;

  CutSet Complement() const;
  // The side not containing the root.
  CutSet Normalized() const { return contains(kRoot) ? Complement() : *this; }

  CutSet Union(const CutSet& other) const;
  CutSet Intersection(const CutSet& other) const;
  bool Intersects(const CutSet& other) const;
  bool IsSubsetOf(const CutSet& other) const;
  // Neither disjoint nor nested.
  bool Crosses(const CutSet& other) const;

  std::vector<VertexId> Members() const;
  // Low 64 bits; exact when n <= 64.
  std::uint64_t mask() const { return words_.empty() ? 0 : words_[0]; }
  std::string ToString() const;

  bool operator==(const CutSet& other) const = default;
  // Orders by the integer value of the bitset.
  std::strong_ordering operator<=>(const CutSet& other) const;

 private:
  void Trim();

  int n_;
  std::vector<std::uint64_t> words_;
};

// Entries of g with exactly one end in s (multiplicities preserved).
// Copies of each edge entry of a base graph, indexed like its edges().
using EdgeMultiset = std::vector<int>;

// Entries with a positive count, multiplicity replaced by the count.
MultiGraph SubgraphOf(const MultiGraph& base, const EdgeMultiset& counts);
Rational MultisetCost(const MultiGraph& base, const EdgeMultiset& counts);

std::vector<Edge> CutEdges(const MultiGraph& g, const CutSet& s);
// |delta(s)| counting multiplicity.
long CutSize(const MultiGraph& g, const CutSet& s);

struct MinCut {
  CutSet side;  // normalized
  Rational value;
};

// Minimum weight proper cut; weights are per edge entry. Throws for n < 2.
MinCut GlobalMinCut(const MultiGraph& g, const std::vector<Rational>& weights);

int EdgeConnectivity(const MultiGraph& g);
bool IsKEdgeConnected(const MultiGraph& g, int k);
// True when removing any set of fewer than k vertices leaves it connected.
bool IsKVertexConnected(const MultiGraph& g, int k);
bool IsConnected(const MultiGraph& g);

// Canonical form up to vertex relabeling. Two graphs receive the same label
// iff they are isomorphic, counting multiplicities and ignoring costs.
std::string CanonicalLabel(const MultiGraph& g, int max_vertices = 12);

// Canonical form of a symmetric matrix of nonnegative integer edge labels
// (0 = no edge). Also returns the permutation: order[i] is the vertex placed
// at position i.
struct CanonicalForm {
  std::string label;
  std::vector<VertexId> order;
};
CanonicalForm CanonicalizeLabels(const std::vector<std::vector<long>>& labels,
                                 int max_vertices = 12);

MultiGraph Relabel(const MultiGraph& g, std::span<const VertexId> perm);

std::string ToDot(const MultiGraph& g, const std::string& name = "G");

// Stoer-Wagner on a dense symmetric weight matrix. Deterministic: phases start
// at the lowest surviving vertex and ties go to the lowest index. W must be an
// ordered additive type (long, Rational).
template <typename W>
std::pair<std::vector<VertexId>, W> StoerWagner(std::vector<std::vector<W>> w) {
  const int n = static_cast<int>(w.size());
  if (n < 2) Fail(ErrorKind::kInvalidArgument, "no proper cut exists");
  std::vector<std::vector<VertexId>> group(n);
  for (int v = 0; v < n; ++v) group[v] = {v};
  std::vector<bool> alive(n, true);
  std::vector<VertexId> best_side;
  W best{};
  bool have_best = false;
  for (int phase = n; phase > 1; --phase) {
    std::vector<W> key(n, W{});
    std::vector<bool> added(n, false);
    int prev = -1;
    int last = -1;
    for (int step = 0; step < phase; ++step) {
      int pick = -1;
      for (int v = 0; v < n; ++v) {
        if (!alive[v] || added[v]) continue;
        if (pick < 0 || key[v] > key[pick]) pick = v;
      }
      added[pick] = true;
      prev = last;
      last = pick;
      for (int v = 0; v < n; ++v) {
        if (alive[v] && !added[v]) key[v] += w[pick][v];
      }
    }
    const W& cut_of_phase = key[last];
    if (!have_best || cut_of_phase < best) {
      best = cut_of_phase;
      best_side = group[last];
      have_best = true;
    }
    group[prev].insert(group[prev].end(), group[last].begin(), group[last].end());
    for (int v = 0; v < n; ++v) {
      w[prev][v] += w[last][v];
      w[v][prev] = w[prev][v];
    }
    w[prev][prev] = W{};
    alive[last] = false;
  }
  return {best_side, best};
}

}  // namespace cutgap

#endif  // CUTGAP_GRAPH_HPP_
