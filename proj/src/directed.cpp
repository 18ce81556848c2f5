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

#include <cstdint>
#include <random>

#include "cutgap/error.hpp"
#include "cutgap/extreme.hpp"
#include "cutgap/linalg.hpp"
#include "cutgap/lp.hpp"

namespace cutgap {

DirectedSolution::DirectedSolution(int n) : n_(n) {
  if (n < 1) Fail(ErrorKind::kInvalidArgument, "solution needs at least one vertex");
}

void DirectedSolution::Set(VertexId from, VertexId to, const Rational& value) {
  if (from < 0 || to < 0 || from >= n_ || to >= n_ || from == to) {
    Fail(ErrorKind::kInvalidArgument, "invalid arc");
  }
  if (value < 0) Fail(ErrorKind::kInvalidArgument, "arc values must be nonnegative");
  if (value == 0) {
    values_.erase({from, to});
  } else {
    values_[{from, to}] = value;
  }
}

Rational DirectedSolution::Get(VertexId from, VertexId to) const {
  auto it = values_.find({from, to});
  return it == values_.end() ? Rational(0) : it->second;
}

Rational DirectedSolution::OutValue(const CutSet& u) const {
  Rational total;
  for (const auto& [arc, y] : values_) {
    if (u.contains(arc.first) && !u.contains(arc.second)) total += y;
  }
  return total;
}

DirectedSolution LiftToDirected(const FractionalSolution& x) {
  if (auto violation = Separate(x, 2)) {
    Fail(ErrorKind::kDomain, "solution is infeasible for the cut relaxation at k = 2: cut " +
                                 violation->cut.ToString() + " has value " +
                                 ToString(violation->value));
  }
  DirectedSolution y(x.vertex_count());
  for (const auto& [e, v] : x.values()) {
    y.Set(e.first, e.second, v / 2);
    y.Set(e.second, e.first, v / 2);
  }
  return y;
}

FractionalSolution DropDirections(const DirectedSolution& y) {
  FractionalSolution x(y.vertex_count());
  for (const auto& [arc, v] : y.values()) x.Add(arc.first, arc.second, v);
  return x;
}

std::optional<CutSet> ViolatedDirectedCut(const DirectedSolution& y, int max_n) {
  const int n = y.vertex_count();
  if (n > max_n || n > 63) {
    Fail(ErrorKind::kBoundExceeded, "directed cut enumeration bound exceeded");
  }
  std::optional<CutSet> best;
  Rational best_value;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    CutSet u = CutSet::FromMask(n, mask);
    Rational value = y.OutValue(u);
    if (value < 1 && (!best || value < best_value)) {
      best = u;
      best_value = value;
    }
  }
  return best;
}

namespace {

struct FaceLP {
  std::vector<std::pair<VertexId, VertexId>> arcs;
  LinearProgram program;
};

std::vector<Rational> OutRow(const std::vector<std::pair<VertexId, VertexId>>& arcs,
                             const CutSet& u) {
  std::vector<Rational> row(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (u.contains(arcs[i].first) && !u.contains(arcs[i].second)) row[i] = 1;
  }
  return row;
}

// Rank of the constraints tight at y: pair equalities, tight directed cuts,
// and the nonnegativity rows of zero arcs.
std::size_t TightRank(const DirectedSolution& y,
                      const std::vector<std::pair<VertexId, VertexId>>& arcs) {
  const int n = y.vertex_count();
  RationalMatrix rows(0, arcs.size());
  for (std::size_t i = 0; i + 1 < arcs.size(); i += 2) {
    std::vector<Rational> row(arcs.size());
    row[i] = 1;
    row[i + 1] = 1;
    rows.AppendRow(row);
  }
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (y.Get(arcs[i].first, arcs[i].second) == 0) {
      std::vector<Rational> row(arcs.size());
      row[i] = 1;
      rows.AppendRow(row);
    }
  }
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    CutSet u = CutSet::FromMask(n, mask);
    if (y.OutValue(u) == 1) rows.AppendRow(OutRow(arcs, u));
  }
  return Rank(rows);
}

}  // namespace

DirectedFaceResult DirectedFaceExtreme(const FractionalSolution& x, std::uint64_t seed) {
  const int n = x.vertex_count();
  if (n > 20) Fail(ErrorKind::kBoundExceeded, "directed face search needs n <= 20");
  // Nonempty by the symmetric lift; this also rejects infeasible input.
  LiftToDirected(x);

  std::vector<std::pair<VertexId, VertexId>> arcs;
  for (const auto& [e, v] : x.values()) {
    arcs.emplace_back(e.first, e.second);
    arcs.emplace_back(e.second, e.first);
  }
  std::mt19937_64 rng(seed);
  DirectedFaceResult result;
  for (int attempt = 0; attempt < 16; ++attempt) {
    ++result.attempts;
    LinearProgram program;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      if (attempt == 0) {
        program.objective.push_back(Rational(1, static_cast<unsigned long>(i + 2)));
      } else {
        program.objective.push_back(Rational(1, 2 + rng() % 997));
      }
    }
    for (std::size_t i = 0; i + 1 < arcs.size(); i += 2) {
      std::vector<Rational> row(arcs.size());
      row[i] = 1;
      row[i + 1] = 1;
      program.constraints.push_back(
          {row, Sense::kEqual, x.Get(arcs[i].first, arcs[i].second)});
    }
    for (VertexId v = 0; v < n; ++v) {
      CutSet u(n, {v});
      program.constraints.push_back({OutRow(arcs, u), Sense::kGreaterEqual, Rational(1)});
      program.constraints.push_back(
          {OutRow(arcs, u.Complement()), Sense::kGreaterEqual, Rational(1)});
    }
    DirectedSolution y(n);
    for (;;) {
      LPOutcome outcome = SolveLP(program);
      if (outcome.status != LPStatus::kOptimal) {
        Fail(ErrorKind::kDomain, "directed face is empty");
      }
      y = DirectedSolution(n);
      for (std::size_t i = 0; i < arcs.size(); ++i) {
        y.Set(arcs[i].first, arcs[i].second, outcome.solution[i]);
      }
      auto cut = ViolatedDirectedCut(y);
      if (!cut) break;
      program.constraints.push_back({OutRow(arcs, *cut), Sense::kGreaterEqual, Rational(1)});
    }
    result.rank = TightRank(y, arcs);
    if (result.rank != arcs.size()) continue;
    result.y = std::move(y);
    bool first = true;
    for (const auto& [arc, v] : result.y.values()) {
      if (first || v < result.min_positive) result.min_positive = v;
      first = false;
    }
    return result;
  }
  Fail(ErrorKind::kDomain, "no vertex of the directed face found");
}

}  // namespace cutgap
