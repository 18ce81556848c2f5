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

#include "cutgap/metric.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cutgap/cutlp.hpp"
#include "cutgap/error.hpp"

namespace cutgap {

std::size_t MetricClosure::EntryOf(VertexId u, VertexId v) const {
  const int n = complete.vertex_count();
  if (u == v || u < 0 || v < 0 || u >= n || v >= n) {
    Fail(ErrorKind::kInvalidArgument, "invalid vertex pair");
  }
  if (u > v) std::swap(u, v);
  return static_cast<std::size_t>(u) * n - static_cast<std::size_t>(u) * (u + 1) / 2 + (v - u - 1);
}

MetricClosure ComputeMetricClosure(const MultiGraph& g) {
  const int n = g.vertex_count();
  if (n > 1 && !IsConnected(g)) Fail(ErrorKind::kDomain, "metric closure needs a connected graph");
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  std::vector<std::vector<Rational>> dist(n, std::vector<Rational>(n));
  std::vector<std::vector<long>> direct(n, std::vector<long>(n, -1));
  std::vector<std::vector<int>> next(n, std::vector<int>(n, -1));
  for (int v = 0; v < n; ++v) reach[v][v] = true;
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (!reach[e.u][e.v] || e.cost < dist[e.u][e.v]) {
      reach[e.u][e.v] = reach[e.v][e.u] = true;
      dist[e.u][e.v] = dist[e.v][e.u] = e.cost;
      direct[e.u][e.v] = direct[e.v][e.u] = static_cast<long>(i);
      next[e.u][e.v] = e.v;
      next[e.v][e.u] = e.u;
    }
  }
  for (int w = 0; w < n; ++w) {
    for (int u = 0; u < n; ++u) {
      if (!reach[u][w] || u == w) continue;
      for (int v = 0; v < n; ++v) {
        if (!reach[w][v] || v == w || v == u) continue;
        Rational through = dist[u][w] + dist[w][v];
        if (!reach[u][v] || through < dist[u][v]) {
          reach[u][v] = true;
          dist[u][v] = through;
          next[u][v] = next[u][w];
        }
      }
    }
  }

  MetricClosure out{MultiGraph(n), dist, {}};
  out.path.assign(n, std::vector<std::vector<std::size_t>>(n));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      for (int a = u, steps = 0; a != v; a = next[a][v], ++steps) {
        if (steps >= n) throw std::logic_error("shortest path reconstruction looped");
        out.path[u][v].push_back(static_cast<std::size_t>(direct[a][next[a][v]]));
      }
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) out.complete.AddEdge(u, v, dist[u][v]);
  }
  return out;
}

EdgeMultiset ExpandToPaths(const MultiGraph& g, const MetricClosure& closure,
                           const EdgeMultiset& f) {
  if (f.size() != closure.complete.edge_count()) {
    Fail(ErrorKind::kInvalidArgument, "multiset does not match the closure");
  }
  EdgeMultiset out(g.edge_count(), 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] < 0) Fail(ErrorKind::kInvalidArgument, "negative edge count");
    if (f[i] == 0) continue;
    const Edge& e = closure.complete.edges()[i];
    for (std::size_t j : closure.path[e.u][e.v]) out[j] += f[i];
  }
  if (MultisetCost(g, out) != MultisetCost(closure.complete, f)) {
    throw std::logic_error("path expansion changed the cost");
  }
  return out;
}

EdgeMultiset Minimalize(const MultiGraph& base, const EdgeMultiset& f, int k) {
  MultiGraph current = SubgraphOf(base, f);
  if (!IsKEdgeConnected(current, k)) {
    MinCut cut = GlobalMinCut(current, std::vector<Rational>(current.edge_count(), Rational(1)));
    Fail(ErrorKind::kDomain, "input is not " + std::to_string(k) + "-edge-connected: cut " +
                                 cut.side.ToString() + " has " + ToString(cut.value) + " edges");
  }
  std::vector<std::size_t> order(f.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return base.edges()[a].cost > base.edges()[b].cost;
  });
  EdgeMultiset out = f;
  for (std::size_t i : order) {
    while (out[i] > 0) {
      --out[i];
      if (!IsKEdgeConnected(SubgraphOf(base, out), k)) {
        ++out[i];
        break;
      }
    }
  }
  return out;
}

ConversionResult EcsmToEcss(const MultiGraph& base, const EdgeMultiset& f) {
  const int n = base.vertex_count();
  if (n < 3) Fail(ErrorKind::kDomain, "conversion needs at least 3 vertices");
  if (!IsMetric(base)) {
    Fail(ErrorKind::kDomain, "conversion needs a complete simple graph with metric costs");
  }
  std::vector<std::vector<std::size_t>> entry(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < base.edge_count(); ++i) {
    const Edge& e = base.edges()[i];
    entry[e.u][e.v] = entry[e.v][e.u] = i;
  }
  ConversionResult result;
  result.input_cost = MultisetCost(base, f);
  EdgeMultiset current = Minimalize(base, f, 2);

  auto count = [&](VertexId u, VertexId v) -> int& { return current[entry[u][v]]; };
  for (int guard = 0;; ++guard) {
    if (guard > 10000) throw std::logic_error("parallel pair elimination did not terminate");
    VertexId u = -1;
    VertexId v = -1;
    for (VertexId a = 0; a < n && u < 0; ++a) {
      for (VertexId b = a + 1; b < n; ++b) {
        if (count(a, b) >= 2) {
          u = a;
          v = b;
          break;
        }
      }
    }
    if (u < 0) break;

    MultiGraph simplified(n);
    for (VertexId a = 0; a < n; ++a) {
      for (VertexId b = a + 1; b < n; ++b) {
        if (count(a, b) > 0 && !(a == u && b == v)) simplified.AddEdge(a, b);
      }
    }
    if (IsConnected(simplified)) throw std::logic_error("parallel pair is not a bridge");

    VertexId w = -1;
    for (VertexId c = 0; c < n && w < 0; ++c) {
      if (c != u && c != v && (count(u, c) > 0 || count(v, c) > 0)) w = c;
    }
    if (w < 0) throw std::logic_error("parallel pair has no other neighbour");
    if (count(u, w) > 0) {
      --count(u, v);
      --count(u, w);
      ++count(v, w);
    } else {
      --count(u, v);
      --count(v, w);
      ++count(u, w);
    }
    ++result.replacements;
    current = Minimalize(base, current, 2);
  }

  result.edges = current;
  result.output_cost = MultisetCost(base, current);
  MultiGraph out = SubgraphOf(base, current);
  if (!out.IsSimple() || !IsKEdgeConnected(out, 2) || result.output_cost > result.input_cost) {
    throw std::logic_error("conversion produced an invalid subgraph");
  }
  return result;
}

}  // namespace cutgap
