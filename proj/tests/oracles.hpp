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

// Brute-force references for the tests. Each one uses only the plain data
// containers of the library, never its algorithms, so that agreement is
// evidence rather than self-consistency.

#ifndef CUTGAP_TESTS_ORACLES_HPP_
#define CUTGAP_TESTS_ORACLES_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "cutgap/cutlp.hpp"
#include "cutgap/graph.hpp"
#include "cutgap/rational.hpp"
#include "cutgap/reductions.hpp"

namespace oracle {

using cutgap::Edge;
using cutgap::Integer;
using cutgap::MultiGraph;
using cutgap::Rational;

// Symmetric multiplicity matrix as plain counts.
inline std::vector<std::vector<long>> Counts(const MultiGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
  for (const auto& e : g.edges()) {
    m[e.u][e.v] += e.multiplicity;
    m[e.v][e.u] += e.multiplicity;
  }
  return m;
}

// Minimum over all proper cuts (masks avoiding vertex n-1) of the count
// crossing; n <= 20.
// Augmenting-path max flow between s and t on a symmetric capacity matrix.
inline long MaxFlow(std::vector<std::vector<long>> cap, int s, int t) {
  const int n = static_cast<int>(cap.size());
  long flow = 0;
  while (true) {
    std::vector<int> parent(n, -1);
    parent[s] = s;
    std::vector<int> queue{s};
    for (std::size_t h = 0; h < queue.size() && parent[t] < 0; ++h) {
      const int u = queue[h];
      for (int v = 0; v < n; ++v) {
        if (parent[v] < 0 && cap[u][v] > 0) {
          parent[v] = u;
          queue.push_back(v);
        }
      }
    }
    if (parent[t] < 0) return flow;
    long push = -1;
    for (int v = t; v != s; v = parent[v]) {
      const long c = cap[parent[v]][v];
      if (push < 0 || c < push) push = c;
    }
    for (int v = t; v != s; v = parent[v]) {
      cap[parent[v]][v] -= push;
      cap[v][parent[v]] += push;
    }
    flow += push;
  }
}

inline long FlowConnectivity(const std::vector<std::vector<long>>& m) {
  const int n = static_cast<int>(m.size());
  if (n < 2) return 0;
  long best = -1;
  for (int v = 1; v < n; ++v) {
    const long f = MaxFlow(m, 0, v);
    if (best < 0 || f < best) best = f;
  }
  return best;
}

// Exhaustive over all cuts for small n, max flow beyond.
inline long CutConnectivity(const std::vector<std::vector<long>>& m) {
  const int n = static_cast<int>(m.size());
  if (n < 2) return 0;
  if (n > 11) return FlowConnectivity(m);
  long best = -1;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << (n - 1)); ++mask) {
    long cut = 0;
    for (int u = 0; u < n; ++u) {
      if (!(mask >> u & 1u)) continue;
      for (int v = 0; v < n; ++v) {
        if (!(mask >> v & 1u)) cut += m[u][v];
      }
    }
    if (best < 0 || cut < best) best = cut;
  }
  return best;
}

inline long CutConnectivity(const MultiGraph& g) { return CutConnectivity(Counts(g)); }

inline Rational MinCutValue(const cutgap::FractionalSolution& x) {
  const int n = x.vertex_count();
  Rational best;
  bool first = true;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << (n - 1)); ++mask) {
    Rational cut;
    for (const auto& [e, v] : x.values()) {
      if ((mask >> e.first & 1u) != (mask >> e.second & 1u)) cut += v;
    }
    if (first || cut < best) best = cut;
    first = false;
  }
  return best;
}

// Minimum Hamiltonian cycle by permutations fixing vertex 0.
inline Rational TspByPermutation(const std::vector<std::vector<Rational>>& c) {
  const int n = static_cast<int>(c.size());
  std::vector<int> p(n - 1);
  std::iota(p.begin(), p.end(), 1);
  Rational best;
  bool first = true;
  do {
    Rational cost = c[0][p[0]] + c[p.back()][0];
    for (int i = 0; i + 1 < n - 1; ++i) cost += c[p[i]][p[i + 1]];
    if (first || cost < best) best = cost;
    first = false;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

// Cheapest choice of copies (0..cap per edge entry, capped further by the
// entry multiplicity when respect_multiplicity) whose union is
// k-edge-connected. Entries in forced are taken at full multiplicity.
inline std::optional<Rational> MinCostConnected(const MultiGraph& g, int k, int cap,
                                                bool respect_multiplicity,
                                                const std::vector<bool>& forced = {}) {
  const int n = g.vertex_count();
  const auto& edges = g.edges();
  const std::size_t m = edges.size();
  std::vector<int> limit(m);
  for (std::size_t i = 0; i < m; ++i) {
    limit[i] = respect_multiplicity ? std::min(cap, edges[i].multiplicity) : cap;
  }
  std::vector<int> choice(m, 0);
  std::optional<Rational> best;
  std::vector<std::vector<long>> counts(n, std::vector<long>(n, 0));
  std::function<void(std::size_t, Rational)> rec = [&](std::size_t i, Rational cost) {
    if (best && cost >= *best) return;
    if (i == m) {
      if (CutConnectivity(counts) >= k) best = cost;
      return;
    }
    const Edge& e = edges[i];
    // Feasibility with everything remaining at its limit.
    {
      auto upper = counts;
      for (std::size_t j = i; j < m; ++j) {
        upper[edges[j].u][edges[j].v] += limit[j];
        upper[edges[j].v][edges[j].u] += limit[j];
      }
      if (CutConnectivity(upper) < k) return;
    }
    const int lo = !forced.empty() && forced[i] ? limit[i] : 0;
    for (int c = limit[i]; c >= lo; --c) {
      counts[e.u][e.v] += c;
      counts[e.v][e.u] += c;
      rec(i + 1, cost + e.cost * c);
      counts[e.u][e.v] -= c;
      counts[e.v][e.u] -= c;
    }
  };
  rec(0, Rational(0));
  return best;
}

// All simple paths between every pair; shortest cost per pair.
inline std::vector<std::vector<std::optional<Rational>>> ShortestBySimplePaths(const MultiGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<std::optional<Rational>>> best(n, std::vector<std::optional<Rational>>(n));
  std::vector<bool> on(n, false);
  std::function<void(int, int, Rational)> walk = [&](int s, int u, Rational cost) {
    if (!best[s][u] || cost < *best[s][u]) best[s][u] = cost;
    for (const auto& e : g.edges()) {
      int w = -1;
      if (e.u == u) w = e.v;
      if (e.v == u) w = e.u;
      if (w < 0 || on[w]) continue;
      on[w] = true;
      walk(s, w, cost + e.cost);
      on[w] = false;
    }
  };
  for (int s = 0; s < n; ++s) {
    on.assign(n, false);
    on[s] = true;
    walk(s, s, Rational(0));
  }
  return best;
}

// Vertices of {A x (sense) b, x >= 0} by trying every choice of n tight rows
// among the constraints and the nonnegativity bounds; n <= 10 variables.
struct Row {
  std::vector<Rational> a;
  int sense;  // -1: <=, 0: =, 1: >=
  Rational b;
};

inline bool Satisfies(const std::vector<Row>& rows, const std::vector<Rational>& x) {
  for (const auto& v : x) {
    if (v < 0) return false;
  }
  for (const auto& r : rows) {
    Rational lhs;
    for (std::size_t j = 0; j < x.size(); ++j) lhs += r.a[j] * x[j];
    if (r.sense == 0 && lhs != r.b) return false;
    if (r.sense < 0 && lhs > r.b) return false;
    if (r.sense > 0 && lhs < r.b) return false;
  }
  return true;
}

// Gauss-Jordan on a square system; nullopt when singular.
inline std::optional<std::vector<Rational>> SolveSquare(std::vector<std::vector<Rational>> a,
                                                        std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
      b[r] -= f * b[c];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

inline std::vector<std::vector<Rational>> Vertices(const std::vector<Row>& rows, std::size_t n) {
  // Candidate tight rows: constraints then x_j = 0.
  std::vector<std::pair<std::vector<Rational>, Rational>> candidates;
  for (const auto& r : rows) candidates.emplace_back(r.a, r.b);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> unit(n);
    unit[j] = 1;
    candidates.emplace_back(unit, Rational(0));
  }
  std::vector<std::vector<Rational>> out;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (pick.size() == n) {
      std::vector<std::vector<Rational>> a;
      std::vector<Rational> b;
      for (std::size_t i : pick) {
        a.push_back(candidates[i].first);
        b.push_back(candidates[i].second);
      }
      auto x = SolveSquare(a, b);
      if (x && Satisfies(rows, *x) && std::find(out.begin(), out.end(), *x) == out.end()) {
        out.push_back(*x);
      }
      return;
    }
    for (std::size_t i = from; i < candidates.size(); ++i) {
      if (candidates.size() - i < n - pick.size()) break;
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

// Every 3-uniform, 2-regular family of k triples over 3k/2 elements, as
// nondecreasing sequences of triples (duplicates allowed).
inline std::vector<cutgap::SetCoverInstance> AllSetCoverInstances(int k) {
  std::vector<cutgap::SetCoverInstance> out;
  if (k % 2 != 0) return out;
  const int ground = 3 * k / 2;
  std::vector<std::array<int, 3>> triples;
  for (int a = 0; a < ground; ++a) {
    for (int b = a + 1; b < ground; ++b) {
      for (int c = b + 1; c < ground; ++c) triples.push_back({a, b, c});
    }
  }
  std::vector<int> degree(ground, 0);
  std::vector<std::array<int, 3>> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(chosen.size()) == k) {
      if (std::all_of(degree.begin(), degree.end(), [](int d) { return d == 2; })) {
        out.push_back({ground, chosen});
      }
      return;
    }
    for (std::size_t i = from; i < triples.size(); ++i) {
      const auto& t = triples[i];
      if (degree[t[0]] == 2 || degree[t[1]] == 2 || degree[t[2]] == 2) continue;
      for (int x : t) ++degree[x];
      chosen.push_back(t);
      rec(i);
      chosen.pop_back();
      for (int x : t) --degree[x];
    }
  };
  rec(0);
  return out;
}

inline Rational RandomRational(std::mt19937_64& rng, int max_num, int max_den) {
  Rational r(static_cast<long>(rng() % (max_num + 1)), static_cast<long>(1 + rng() % max_den));
  r.canonicalize();
  return r;
}

}  // namespace oracle

#endif  // CUTGAP_TESTS_ORACLES_HPP_
