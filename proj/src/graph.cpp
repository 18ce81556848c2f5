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

#include "cutgap/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace cutgap {

MultiGraph::MultiGraph(int n) : n_(n) {
  if (n < 1) Fail(ErrorKind::kInvalidArgument, "graph needs at least one vertex");
}

void MultiGraph::CheckVertex(VertexId v) const {
  if (v < 0 || v >= n_) {
    Fail(ErrorKind::kInvalidArgument,
         "vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n_) + ")");
  }
}

std::size_t MultiGraph::AddEdge(VertexId u, VertexId v, Rational cost, int multiplicity) {
  CheckVertex(u);
  CheckVertex(v);
  if (u == v) Fail(ErrorKind::kInvalidArgument, "self-loop at vertex " + std::to_string(u));
  if (multiplicity < 1) Fail(ErrorKind::kInvalidArgument, "multiplicity must be positive");
  if (cost < 0) Fail(ErrorKind::kInvalidArgument, "edge costs must be nonnegative");
  edges_.push_back({u, v, std::move(cost), multiplicity});
  return edges_.size() - 1;
}

long MultiGraph::TotalMultiplicity() const {
  long total = 0;
  for (const auto& e : edges_) total += e.multiplicity;
  return total;
}

Rational MultiGraph::TotalCost() const {
  Rational total;
  for (const auto& e : edges_) total += e.cost * e.multiplicity;
  return total;
}

long MultiGraph::Degree(VertexId v) const {
  long d = 0;
  for (const auto& e : edges_) {
    if (e.u == v || e.v == v) d += e.multiplicity;
  }
  return d;
}

std::vector<std::vector<long>> MultiGraph::MultiplicityMatrix() const {
  std::vector<std::vector<long>> m(n_, std::vector<long>(n_, 0));
  for (const auto& e : edges_) {
    m[e.u][e.v] += e.multiplicity;
    m[e.v][e.u] += e.multiplicity;
  }
  return m;
}

bool MultiGraph::IsSimple() const {
  const auto m = MultiplicityMatrix();
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) {
      if (m[u][v] > 1) return false;
    }
  }
  return true;
}

CutSet::CutSet(int n) : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64, 0) {}

CutSet::CutSet(int n, std::initializer_list<VertexId> members) : CutSet(n) {
  for (VertexId v : members) {
    if (v < 0 || v >= n) Fail(ErrorKind::kInvalidArgument, "cut member out of range");
    insert(v);
  }
}

CutSet CutSet::FromMembers(int n, std::span<const VertexId> members) {
  CutSet s(n);
  for (VertexId v : members) {
    if (v < 0 || v >= n) Fail(ErrorKind::kInvalidArgument, "cut member out of range");
    s.insert(v);
  }
  return s;
}

CutSet CutSet::FromMask(int n, std::uint64_t mask) {
  if (n > 64) Fail(ErrorKind::kInvalidArgument, "mask construction needs n <= 64");
  CutSet s(n);
  if (!s.words_.empty()) s.words_[0] = mask;
  s.Trim();
  return s;
}

void CutSet::Trim() {
  if (words_.empty()) return;
  const int tail = n_ & 63;
  if (tail != 0) words_.back() &= (std::uint64_t{1} << tail) - 1;
}

int CutSet::count() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool CutSet::IsProper() const {
  const int c = count();
  return c > 0 && c < n_;
}

CutSet CutSet::Complement() const {
  CutSet out(*this);
  for (auto& w : out.words_) w = ~w;
  out.Trim();
  return out;
}

CutSet CutSet::Union(const CutSet& other) const {
  CutSet out(*this);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] |= other.words_[i];
  return out;
}

CutSet CutSet::Intersection(const CutSet& other) const {
  CutSet out(*this);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= other.words_[i];
  return out;
}

bool CutSet::Intersects(const CutSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

bool CutSet::IsSubsetOf(const CutSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

bool CutSet::Crosses(const CutSet& other) const {
  return Intersects(other) && !IsSubsetOf(other) && !other.IsSubsetOf(*this);
}

std::vector<VertexId> CutSet::Members() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n_; ++v) {
    if (contains(v)) out.push_back(v);
  }
  return out;
}

std::string CutSet::ToString() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (VertexId v : Members()) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

std::strong_ordering CutSet::operator<=>(const CutSet& other) const {
  if (n_ != other.n_) return n_ <=> other.n_;
  for (std::size_t i = words_.size(); i-- > 0;) {
    if (words_[i] != other.words_[i]) return words_[i] <=> other.words_[i];
  }
  return std::strong_ordering::equal;
}

namespace {

void CheckCut(const MultiGraph& g, const CutSet& s) {
  if (s.universe() != g.vertex_count()) {
    Fail(ErrorKind::kInvalidArgument, "cut width does not match the graph");
  }
  if (!s.IsProper()) Fail(ErrorKind::kInvalidArgument, "invalid cut: empty or full vertex set");
}

}  // namespace

std::vector<Edge> CutEdges(const MultiGraph& g, const CutSet& s) {
  CheckCut(g, s);
  std::vector<Edge> out;
  for (const auto& e : g.edges()) {
    if (s.contains(e.u) != s.contains(e.v)) out.push_back(e);
  }
  return out;
}

long CutSize(const MultiGraph& g, const CutSet& s) {
  long total = 0;
  for (const auto& e : CutEdges(g, s)) total += e.multiplicity;
  return total;
}

MinCut GlobalMinCut(const MultiGraph& g, const std::vector<Rational>& weights) {
  const int n = g.vertex_count();
  if (n < 2) Fail(ErrorKind::kInvalidArgument, "no proper cut exists");
  if (weights.size() != g.edge_count()) {
    Fail(ErrorKind::kInvalidArgument, "one weight per edge entry is required");
  }
  std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edges()[i];
    if (weights[i] < 0) Fail(ErrorKind::kInvalidArgument, "cut weights must be nonnegative");
    w[e.u][e.v] += weights[i];
    w[e.v][e.u] += weights[i];
  }
  auto [side, value] = StoerWagner(std::move(w));
  return {CutSet::FromMembers(n, side).Normalized(), value};
}

int EdgeConnectivity(const MultiGraph& g) {
  if (g.vertex_count() < 2) Fail(ErrorKind::kInvalidArgument, "no proper cut exists");
  return static_cast<int>(StoerWagner(g.MultiplicityMatrix()).second);
}

bool IsKEdgeConnected(const MultiGraph& g, int k) {
  if (k <= 0 || g.vertex_count() < 2) return true;
  return EdgeConnectivity(g) >= k;
}

namespace {

bool ConnectedWithout(const MultiGraph& g, const std::vector<bool>& removed) {
  const int n = g.vertex_count();
  std::vector<std::vector<VertexId>> adj(n);
  for (const auto& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  int start = -1;
  int alive = 0;
  for (int v = 0; v < n; ++v) {
    if (!removed[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  }
  if (alive <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<VertexId> stack{start};
  seen[start] = true;
  int reached = 1;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (VertexId v : adj[u]) {
      if (!removed[v] && !seen[v]) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == alive;
}

bool RemovalKeepsConnected(const MultiGraph& g, std::vector<bool>& removed, int from,
                           int remaining) {
  if (!ConnectedWithout(g, removed)) return false;
  if (remaining == 0) return true;
  for (int v = from; v < g.vertex_count(); ++v) {
    removed[v] = true;
    const bool ok = RemovalKeepsConnected(g, removed, v + 1, remaining - 1);
    removed[v] = false;
    if (!ok) return false;
  }
  return true;
}

}  // namespace

bool IsConnected(const MultiGraph& g) {
  return ConnectedWithout(g, std::vector<bool>(g.vertex_count(), false));
}

bool IsKVertexConnected(const MultiGraph& g, int k) {
  if (k <= 0) return true;
  if (g.vertex_count() <= k) return false;
  std::vector<bool> removed(g.vertex_count(), false);
  return RemovalKeepsConnected(g, removed, 0, k - 1);
}

MultiGraph Relabel(const MultiGraph& g, std::span<const VertexId> perm) {
  if (static_cast<int>(perm.size()) != g.vertex_count()) {
    Fail(ErrorKind::kInvalidArgument, "permutation size mismatch");
  }
  MultiGraph out(g.vertex_count());
  for (const auto& e : g.edges()) out.AddEdge(perm[e.u], perm[e.v], e.cost, e.multiplicity);
  return out;
}

std::string ToDot(const MultiGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) os << "  " << v << ";\n";
  for (const auto& e : g.edges()) {
    for (int c = 0; c < e.multiplicity; ++c) {
      os << "  " << e.u << " -- " << e.v << " [label=\"" << ToString(e.cost) << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

MultiGraph SubgraphOf(const MultiGraph& base, const EdgeMultiset& counts) {
  if (counts.size() != base.edge_count()) {
    Fail(ErrorKind::kInvalidArgument, "multiset size does not match the edge count");
  }
  MultiGraph out(base.vertex_count());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] < 0) Fail(ErrorKind::kInvalidArgument, "negative edge count");
    if (counts[i] > 0) {
      const Edge& e = base.edges()[i];
      out.AddEdge(e.u, e.v, e.cost, counts[i]);
    }
  }
  return out;
}

Rational MultisetCost(const MultiGraph& base, const EdgeMultiset& counts) {
  if (counts.size() != base.edge_count()) {
    Fail(ErrorKind::kInvalidArgument, "multiset size does not match the edge count");
  }
  Rational total;
  for (std::size_t i = 0; i < counts.size(); ++i) total += base.edges()[i].cost * counts[i];
  return total;
}

}  // namespace cutgap
