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

#include "cutgap/reductions.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>

#include "cutgap/error.hpp"

namespace cutgap {

namespace {

using Bits = std::vector<std::uint64_t>;

Bits MakeBits(std::size_t size) { return Bits((size + 63) / 64, 0); }
void SetBit(Bits& b, std::size_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }
bool TestBit(const Bits& b, std::size_t i) { return (b[i >> 6] >> (i & 63)) & 1u; }

std::string PairText(VertexPair p) {
  return "{" + std::to_string(p.first) + ", " + std::to_string(p.second) + "}";
}

}  // namespace

void ValidatePathCover(const PathCoverInstance& inst) {
  const MultiGraph& t = inst.tree;
  const int n = t.vertex_count();
  if (static_cast<int>(t.edge_count()) != n - 1) {
    Fail(ErrorKind::kInvalidArgument, "tree on " + std::to_string(n) + " vertices must have " +
                                          std::to_string(n - 1) + " edges, got " +
                                          std::to_string(t.edge_count()));
  }
  for (const auto& e : t.edges()) {
    if (e.multiplicity != 1) Fail(ErrorKind::kInvalidArgument, "tree edges must have multiplicity 1");
  }
  if (n > 1 && !IsConnected(t)) Fail(ErrorKind::kInvalidArgument, "tree is not connected");
  for (const auto& p : inst.pairs) {
    if (p.first < 0 || p.second < 0 || p.first >= n || p.second >= n) {
      Fail(ErrorKind::kInvalidArgument, "pair " + PairText(p) + " has an endpoint out of range");
    }
    if (p.first == p.second) {
      Fail(ErrorKind::kInvalidArgument, "pair " + PairText(p) + " has equal endpoints");
    }
  }
}

std::vector<std::size_t> PathEdges(const PathCoverInstance& inst, VertexPair pair) {
  const int n = inst.tree.vertex_count();
  const auto [s, t] = pair;
  if (s < 0 || t < 0 || s >= n || t >= n) {
    Fail(ErrorKind::kInvalidArgument, "pair " + PairText(pair) + " has an endpoint out of range");
  }
  if (s == t) Fail(ErrorKind::kInvalidArgument, "pair " + PairText(pair) + " has equal endpoints");
  std::vector<std::vector<std::pair<VertexId, std::size_t>>> adj(n);
  const auto& edges = inst.tree.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    adj[edges[i].u].emplace_back(edges[i].v, i);
    adj[edges[i].v].emplace_back(edges[i].u, i);
  }
  std::vector<long> via(n, -1);
  std::vector<bool> seen(n, false);
  std::queue<VertexId> queue;
  queue.push(s);
  seen[s] = true;
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop();
    for (const auto& [w, i] : adj[u]) {
      if (seen[w]) continue;
      seen[w] = true;
      via[w] = static_cast<long>(i);
      queue.push(w);
    }
  }
  if (!seen[t]) Fail(ErrorKind::kInvalidArgument, "pair " + PairText(pair) + " is not joined by the tree");
  std::vector<std::size_t> out;
  for (VertexId v = t; v != s;) {
    const Edge& e = edges[via[v]];
    out.push_back(static_cast<std::size_t>(via[v]));
    v = e.u == v ? e.v : e.u;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool PathCoverFeasible(const PathCoverInstance& inst, const std::vector<std::size_t>& y) {
  const std::size_t m = inst.tree.edge_count();
  std::vector<bool> covered(m, false);
  MultiGraph augmented = inst.tree;
  for (std::size_t i : y) {
    if (i >= inst.pairs.size()) Fail(ErrorKind::kInvalidArgument, "pair index out of range");
    for (std::size_t e : PathEdges(inst, inst.pairs[i])) covered[e] = true;
    augmented.AddEdge(inst.pairs[i].first, inst.pairs[i].second);
  }
  const bool by_paths = std::all_of(covered.begin(), covered.end(), [](bool c) { return c; });
  const bool by_cuts = IsKEdgeConnected(augmented, 2);
  if (by_paths != by_cuts) {
    throw std::logic_error("path coverage and 2-edge-connectivity disagree");
  }
  return by_paths;
}

PathCoverOptimum PathCoverOpt(const PathCoverInstance& inst) {
  ValidatePathCover(inst);
  const std::size_t pairs = inst.pairs.size();
  if (pairs > 24) Fail(ErrorKind::kBoundExceeded, "path cover search needs |X| <= 24");
  const std::size_t m = inst.tree.edge_count();
  std::vector<Bits> covers;
  Bits all = MakeBits(m);
  for (const auto& p : inst.pairs) {
    Bits b = MakeBits(m);
    for (std::size_t e : PathEdges(inst, p)) SetBit(b, e);
    for (std::size_t w = 0; w < b.size(); ++w) all[w] |= b[w];
    covers.push_back(std::move(b));
  }
  PathCoverOptimum out;
  for (std::size_t e = 0; e < m; ++e) {
    if (!TestBit(all, e)) return out;
  }
  out.feasible = true;

  std::vector<std::size_t> chosen;
  std::function<bool(const Bits&, int)> search = [&](const Bits& covered, int budget) {
    std::size_t first = m;
    for (std::size_t e = 0; e < m; ++e) {
      if (!TestBit(covered, e)) {
        first = e;
        break;
      }
    }
    if (first == m) return true;
    if (budget == 0) return false;
    for (std::size_t i = 0; i < pairs; ++i) {
      if (!TestBit(covers[i], first)) continue;
      Bits next = covered;
      for (std::size_t w = 0; w < next.size(); ++w) next[w] |= covers[i][w];
      chosen.push_back(i);
      if (search(next, budget - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (int budget = 0;; ++budget) {
    chosen.clear();
    if (search(MakeBits(m), budget)) break;
  }
  std::sort(chosen.begin(), chosen.end());
  out.size = static_cast<int>(chosen.size());
  out.witness = chosen;
  if (!PathCoverFeasible(inst, out.witness)) throw std::logic_error("path cover witness is infeasible");
  return out;
}

MultiGraph KecssFromPathCover(const PathCoverInstance& inst, int k, bool simple) {
  ValidatePathCover(inst);
  if (k < 2) Fail(ErrorKind::kInvalidArgument, "k must be at least 2");
  const int n = inst.tree.vertex_count();
  if (!simple) {
    MultiGraph g(n);
    for (const auto& e : inst.tree.edges()) g.AddEdge(e.u, e.v, 0, k - 1);
    for (const auto& p : inst.pairs) g.AddEdge(p.first, p.second, 1, 1);
    return g;
  }
  const int size = k + 1;
  MultiGraph g(n * size);
  for (VertexId v = 0; v < n; ++v) {
    for (int i = 0; i < size; ++i) {
      for (int j = i + 1; j < size; ++j) g.AddEdge(v * size + i, v * size + j, 0);
    }
  }
  std::vector<std::vector<bool>> used(n * size, std::vector<bool>(n * size, false));
  for (const auto& e : inst.tree.edges()) {
    for (int i = 0; i < k - 1; ++i) {
      const VertexId a = e.u * size + i;
      const VertexId b = e.v * size + i;
      g.AddEdge(a, b, 0);
      used[a][b] = used[b][a] = true;
    }
  }
  for (const auto& p : inst.pairs) {
    const auto [u, v] = MakePair(p.first, p.second);
    bool placed = false;
    for (int i = 0; i < size && !placed; ++i) {
      for (int j = 0; j < size && !placed; ++j) {
        const VertexId a = u * size + i;
        const VertexId b = v * size + j;
        if (used[a][b]) continue;
        g.AddEdge(a, b, 1);
        used[a][b] = used[b][a] = true;
        placed = true;
      }
    }
    if (!placed) {
      Fail(ErrorKind::kInvalidArgument, "too many pairs between the cliques of " + PairText(p));
    }
  }
  return g;
}

void ValidateSetCover(const SetCoverInstance& sc) {
  if (sc.ground < 0) Fail(ErrorKind::kInvalidArgument, "ground set size is negative");
  std::vector<int> occurrences(sc.ground, 0);
  for (std::size_t i = 0; i < sc.triples.size(); ++i) {
    const auto& t = sc.triples[i];
    for (int a : t) {
      if (a < 0 || a >= sc.ground) {
        Fail(ErrorKind::kInvalidArgument, "not 3-uniform: triple " + std::to_string(i) +
                                              " has element " + std::to_string(a) +
                                              " outside the ground set");
      }
    }
    if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2]) {
      Fail(ErrorKind::kInvalidArgument,
           "not 3-uniform: triple " + std::to_string(i) + " repeats an element");
    }
    for (int a : t) ++occurrences[a];
  }
  for (int j = 0; j < sc.ground; ++j) {
    if (occurrences[j] != 2) {
      Fail(ErrorKind::kInvalidArgument, "not 2-regular: element " + std::to_string(j) +
                                            " lies in " + std::to_string(occurrences[j]) +
                                            " triples");
    }
  }
}

PathCoverInstance SetCoverToPathCover(const SetCoverInstance& sc) {
  ValidateSetCover(sc);
  const int k = static_cast<int>(sc.triples.size());
  PathCoverInstance inst{MultiGraph(1 + sc.ground + 2 * k), {}};
  auto element = [](int j) { return 1 + j; };
  for (int j = 0; j < sc.ground; ++j) inst.tree.AddEdge(0, element(j));
  for (int i = 0; i < k; ++i) {
    const VertexId p = 1 + sc.ground + 2 * i;
    const VertexId q = p + 1;
    const auto& [a, b, c] = sc.triples[i];
    inst.tree.AddEdge(element(a), p);
    inst.tree.AddEdge(element(a), q);
    inst.pairs.push_back(MakePair(p, q));
    inst.pairs.push_back(MakePair(p, element(b)));
    inst.pairs.push_back(MakePair(q, element(c)));
  }
  return inst;
}

int SetCoverOpt(const SetCoverInstance& sc) {
  ValidateSetCover(sc);
  const int k = static_cast<int>(sc.triples.size());
  if (k > 20) Fail(ErrorKind::kBoundExceeded, "set cover search needs at most 20 triples");
  if (sc.ground == 0) return 0;
  std::vector<std::uint64_t> masks;
  for (const auto& t : sc.triples) {
    masks.push_back((std::uint64_t{1} << t[0]) | (std::uint64_t{1} << t[1]) |
                    (std::uint64_t{1} << t[2]));
  }
  const std::uint64_t full = (std::uint64_t{1} << sc.ground) - 1;
  int best = k;
  for (std::uint32_t subset = 0; subset < (std::uint32_t{1} << k); ++subset) {
    const int size = std::popcount(subset);
    if (size >= best) continue;
    std::uint64_t covered = 0;
    for (int i = 0; i < k; ++i) {
      if (subset >> i & 1u) covered |= masks[i];
    }
    if (covered == full) best = size;
  }
  return best;
}

std::vector<std::size_t> SetCoverFromWitness(const SetCoverInstance& sc,
                                             std::vector<std::size_t>& witness) {
  const std::size_t k = sc.triples.size();
  std::vector<int> chosen(3 * k, 0);
  for (std::size_t i : witness) {
    if (i >= 3 * k) Fail(ErrorKind::kInvalidArgument, "pair index out of range");
    chosen[i] = 1;
  }
  std::vector<std::size_t> cover;
  std::vector<std::size_t> rewritten;
  for (std::size_t i = 0; i < k; ++i) {
    const int count = chosen[3 * i] + chosen[3 * i + 1] + chosen[3 * i + 2];
    if (count >= 2) {
      cover.push_back(i);
      rewritten.push_back(3 * i + 1);
      rewritten.push_back(3 * i + 2);
    } else if (chosen[3 * i]) {
      rewritten.push_back(3 * i);
    } else {
      Fail(ErrorKind::kInvalidArgument,
           "witness leaves the edges of triple " + std::to_string(i) + " uncovered");
    }
  }
  witness = std::move(rewritten);
  return cover;
}

}  // namespace cutgap
