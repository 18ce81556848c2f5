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

#include "cutgap/gap.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>

#include "cutgap/error.hpp"
#include "cutgap/lp.hpp"

namespace cutgap {

std::vector<VertexPair> CycleColumn::Edges() const {
  std::vector<VertexPair> out;
  const std::size_t n = cycle.size();
  for (std::size_t i = 0; i < n; ++i) out.push_back(MakePair(cycle[i], cycle[(i + 1) % n]));
  std::sort(out.begin(), out.end());
  return out;
}

bool CycleColumn::Uses(VertexId u, VertexId v) const {
  const std::size_t n = cycle.size();
  for (std::size_t i = 0; i < n; ++i) {
    const VertexId a = cycle[i];
    const VertexId b = cycle[(i + 1) % n];
    if ((a == u && b == v) || (a == v && b == u)) return true;
  }
  return false;
}

namespace {

// Held-Karp over subsets of {1..n-1}; bit b stands for vertex b + 1.
template <typename W>
std::vector<VertexId> HeldKarp(const std::vector<std::vector<W>>& c, W& best) {
  const int n = static_cast<int>(c.size());
  const int m = n - 1;
  const std::uint32_t states = std::uint32_t{1} << m;
  std::vector<W> dp(static_cast<std::size_t>(states) * m);
  std::vector<std::int8_t> parent(static_cast<std::size_t>(states) * m, -1);
  auto at = [m](std::uint32_t mask, int j) { return static_cast<std::size_t>(mask) * m + j; };
  for (std::uint32_t mask = 1; mask < states; ++mask) {
    for (int j = 0; j < m; ++j) {
      if (!(mask >> j & 1u)) continue;
      const std::uint32_t rest = mask ^ (std::uint32_t{1} << j);
      if (rest == 0) {
        dp[at(mask, j)] = c[0][j + 1];
        continue;
      }
      bool first = true;
      W& cell = dp[at(mask, j)];
      for (int i = 0; i < m; ++i) {
        if (!(rest >> i & 1u)) continue;
        W candidate = dp[at(rest, i)] + c[i + 1][j + 1];
        if (first || candidate < cell) {
          cell = candidate;
          parent[at(mask, j)] = static_cast<std::int8_t>(i);
          first = false;
        }
      }
    }
  }
  const std::uint32_t full = states - 1;
  int last = -1;
  for (int j = 0; j < m; ++j) {
    W candidate = dp[at(full, j)] + c[j + 1][0];
    if (last < 0 || candidate < best) {
      best = candidate;
      last = j;
    }
  }
  std::vector<VertexId> order;
  std::uint32_t mask = full;
  for (int j = last; j >= 0;) {
    order.push_back(j + 1);
    const int prev = parent[at(mask, j)];
    mask ^= std::uint32_t{1} << j;
    j = prev;
  }
  order.push_back(0);
  std::reverse(order.begin(), order.end());
  return order;
}

// Rotated to start at 0 and oriented so the second vertex is the smaller
// neighbour of 0.
CycleColumn Normalize(std::vector<VertexId> cycle) {
  auto zero = std::find(cycle.begin(), cycle.end(), 0);
  std::rotate(cycle.begin(), zero, cycle.end());
  if (cycle.size() > 2 && cycle[1] > cycle.back()) std::reverse(cycle.begin() + 1, cycle.end());
  return CycleColumn{std::move(cycle)};
}

}  // namespace

TspTour TspMinCycle(const std::vector<std::vector<Rational>>& costs) {
  const int n = static_cast<int>(costs.size());
  if (n < 3 || n > 16) {
    Fail(ErrorKind::kBoundExceeded, "tour search needs 3 <= n <= 16, got n = " + std::to_string(n));
  }
  std::vector<Rational> flat;
  for (int u = 0; u < n; ++u) {
    if (static_cast<int>(costs[u].size()) != n) {
      Fail(ErrorKind::kInvalidArgument, "cost matrix is not square");
    }
    for (int v = 0; v < n; ++v) {
      if (u != v && costs[u][v] != costs[v][u]) {
        Fail(ErrorKind::kInvalidArgument, "cost matrix is not symmetric");
      }
      flat.push_back(costs[u][v]);
    }
  }
  // Scaling to integers keeps the DP exact and avoids rational arithmetic in
  // the inner loop.
  const Integer scale = CommonDenominator(flat);
  Integer largest = 0;
  std::vector<std::vector<Integer>> scaled(n, std::vector<Integer>(n));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      scaled[u][v] = Integer(costs[u][v] * scale);
      if (abs(scaled[u][v]) > largest) largest = abs(scaled[u][v]);
    }
  }
  TspTour out;
  std::vector<VertexId> order;
  if (largest * (n + 1) < Integer(std::numeric_limits<std::int64_t>::max() / 4)) {
    std::vector<std::vector<std::int64_t>> c(n, std::vector<std::int64_t>(n));
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) c[u][v] = scaled[u][v].get_si();
    }
    std::int64_t best = 0;
    order = HeldKarp(c, best);
    out.cost = Rational(Integer(static_cast<long>(best)), scale);
  } else {
    Integer best;
    order = HeldKarp(scaled, best);
    out.cost = Rational(best, scale);
  }
  out.cost.canonicalize();
  out.tour = Normalize(std::move(order));
  return out;
}

GapResult DominationGap(const FractionalSolution& x) {
  GapResult result;
  if (x.support_size() == 0) return result;
  const int n = x.vertex_count();
  if (n < 3) Fail(ErrorKind::kDomain, "no Hamiltonian cycle exists on fewer than 3 vertices");
  if (n > 16) Fail(ErrorKind::kBoundExceeded, "domination gap needs n <= 16");

  std::vector<VertexPair> support;
  for (const auto& [e, v] : x.values()) support.push_back(e);

  std::vector<CycleColumn> columns;
  std::set<std::vector<VertexId>> seen;
  auto add = [&](std::vector<VertexId> cycle) {
    CycleColumn c = Normalize(std::move(cycle));
    if (!seen.insert(c.cycle).second) return false;
    columns.push_back(std::move(c));
    return true;
  };

  std::vector<VertexId> identity(n);
  for (int v = 0; v < n; ++v) identity[v] = v;
  add(identity);
  for (VertexId start = 0; start < n; ++start) {
    std::vector<VertexId> tour{start};
    std::vector<bool> used(n, false);
    used[start] = true;
    for (int step = 1; step < n; ++step) {
      VertexId cur = tour.back();
      VertexId pick = -1;
      for (VertexId w = 0; w < n; ++w) {
        if (used[w]) continue;
        if (pick < 0 || x.Get(cur, w) > x.Get(cur, pick)) pick = w;
      }
      used[pick] = true;
      tour.push_back(pick);
    }
    add(tour);
  }
  for (const auto& [u, v] : support) {
    std::vector<VertexId> tour{u, v};
    for (VertexId w = 0; w < n; ++w) {
      if (w != u && w != v) tour.push_back(w);
    }
    add(tour);
  }

  for (;;) {
    ++result.iterations;
    if (result.iterations > 100000) throw std::logic_error("column generation did not terminate");
    LinearProgram master;
    master.objective.assign(columns.size(), Rational(1));
    for (const auto& [u, v] : support) {
      LinearConstraint row;
      row.sense = Sense::kGreaterEqual;
      row.rhs = x.Get(u, v);
      for (const auto& c : columns) row.row.push_back(c.Uses(u, v) ? 1 : 0);
      master.constraints.push_back(std::move(row));
    }
    LPOutcome outcome = SolveLP(master);
    if (outcome.status != LPStatus::kOptimal) {
      throw std::logic_error("restricted master is not optimal");
    }
    std::vector<std::vector<Rational>> price(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < support.size(); ++i) {
      const auto [u, v] = support[i];
      price[u][v] = -outcome.duals[i];
      price[v][u] = -outcome.duals[i];
    }
    TspTour tour = TspMinCycle(price);
    if (1 + tour.cost < 0) {
      if (!add(tour.tour.cycle)) throw std::logic_error("pricing returned an existing column");
      continue;
    }
    result.t = outcome.value;
    result.columns = static_cast<int>(columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (outcome.solution[j] > 0) result.combination.emplace_back(columns[j], outcome.solution[j]);
    }
    break;
  }

  Rational total;
  for (const auto& [c, w] : result.combination) total += w;
  if (total != result.t) throw std::logic_error("combination weights do not sum to t");
  for (const auto& [u, v] : support) {
    Rational cover;
    for (const auto& [c, w] : result.combination) {
      if (c.Uses(u, v)) cover += w;
    }
    if (cover < x.Get(u, v)) throw std::logic_error("combination does not dominate x");
  }
  return result;
}

}  // namespace cutgap
