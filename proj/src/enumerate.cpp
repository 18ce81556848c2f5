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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>

#include "cutgap/error.hpp"
#include "cutgap/extreme.hpp"
#include "cutgap/linalg.hpp"

namespace cutgap {
namespace {

bool ConnectedMasks(int n, const std::vector<std::uint32_t>& adj, std::uint32_t removed) {
  const std::uint32_t all = (n == 32 ? ~0u : ((1u << n) - 1)) & ~removed;
  if (all == 0) return true;
  std::uint32_t seen = all & (~all + 1);
  std::uint32_t frontier = seen;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    next &= all & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == all;
}

bool ThreeVertexConnected(int n, const std::vector<std::uint32_t>& adj) {
  if (n <= 3) return false;
  if (!ConnectedMasks(n, adj, 0)) return false;
  for (int a = 0; a < n; ++a) {
    if (!ConnectedMasks(n, adj, 1u << a)) return false;
    for (int b = a + 1; b < n; ++b) {
      if (!ConnectedMasks(n, adj, (1u << a) | (1u << b))) return false;
    }
  }
  return true;
}

std::string ValuesKey(const FractionalSolution& x) {
  std::ostringstream os;
  for (const auto& [e, v] : x.values()) os << e.first << '-' << e.second << '=' << v << ';';
  return os.str();
}

class BasisSearch {
 public:
  explicit BasisSearch(const MultiGraph& support) : n_(support.vertex_count()) {
    for (const auto& e : support.edges()) vars_.push_back(MakePair(e.u, e.v));
    std::sort(vars_.begin(), vars_.end());
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
    m_ = vars_.size();
  }

  std::vector<FractionalSolution> Run() {
    RowSpan span(m_);
    std::vector<std::vector<Rational>> rows;
    // Degree rows: the singletons and the complement of the root.
    for (VertexId v = 0; v < n_; ++v) {
      auto row = Row(CutSet(n_, {v}));
      if (span.Add(row)) rows.push_back(std::move(row));
    }
    const std::uint64_t limit = std::uint64_t{1} << (n_ - 1);
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
      const int size = std::popcount(mask);
      if (size < 2 || size > n_ - 2) continue;
      CutSet s = CutSet::FromMask(n_, mask << 1);
      auto row = Row(s);
      if (std::all_of(row.begin(), row.end(), [](const Rational& r) { return r == 0; })) continue;
      candidates_.push_back(std::move(s));
      candidate_rows_.push_back(std::move(row));
    }
    std::vector<std::size_t> chosen;
    Extend(0, span, rows, chosen);
    std::vector<FractionalSolution> out;
    for (auto& [key, x] : found_) out.push_back(std::move(x));
    return out;
  }

 private:
  std::vector<Rational> Row(const CutSet& s) const {
    std::vector<Rational> row(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (s.contains(vars_[i].first) != s.contains(vars_[i].second)) row[i] = 1;
    }
    return row;
  }

  void Extend(std::size_t start, const RowSpan& span, std::vector<std::vector<Rational>>& rows,
              std::vector<std::size_t>& chosen) {
    if (span.rank() == m_) {
      Evaluate(rows);
      return;
    }
    const std::size_t need = m_ - span.rank();
    for (std::size_t i = start; i + need <= candidates_.size(); ++i) {
      bool laminar = true;
      for (std::size_t c : chosen) {
        if (candidates_[i].Crosses(candidates_[c])) {
          laminar = false;
          break;
        }
      }
      if (!laminar || !span.IsIndependent(candidate_rows_[i])) continue;
      RowSpan next = span;
      next.Add(candidate_rows_[i]);
      rows.push_back(candidate_rows_[i]);
      chosen.push_back(i);
      Extend(i + 1, next, rows, chosen);
      chosen.pop_back();
      rows.pop_back();
    }
  }

  void Evaluate(const std::vector<std::vector<Rational>>& rows) {
    auto solved = SolveUnique(RationalMatrix::FromRows(rows, m_),
                              std::vector<Rational>(rows.size(), Rational(2)));
    if (solved.kind != LinearSolveResult::Kind::kUnique) return;
    FractionalSolution x(n_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (solved.solution[i] <= 0) return;
      x.Set(vars_[i].first, vars_[i].second, solved.solution[i]);
    }
    if (!CheckFeasible(x, 2, LPVariant::kBounded)) return;
    found_.emplace(ValuesKey(x), std::move(x));
  }

  int n_;
  std::size_t m_ = 0;
  std::vector<VertexPair> vars_;
  std::vector<CutSet> candidates_;
  std::vector<std::vector<Rational>> candidate_rows_;
  std::map<std::string, FractionalSolution> found_;
};

}  // namespace

std::vector<MultiGraph> CandidateSupportGraphs(int n, bool require_three_connected) {
  if (n < 4) return {};
  if (n > 11) Fail(ErrorKind::kBoundExceeded, "support graph generation needs n <= 11");
  std::vector<VertexPair> slots;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  const int e = static_cast<int>(slots.size());
  std::vector<std::uint64_t> incident(n, 0);
  for (int i = 0; i < e; ++i) {
    incident[slots[i].first] |= std::uint64_t{1} << i;
    incident[slots[i].second] |= std::uint64_t{1} << i;
  }
  const int lo = (3 * n + 1) / 2;
  const int hi = 2 * n - 3;
  std::map<std::string, MultiGraph> classes;
  for (int m = lo; m <= hi && m <= e; ++m) {
    // Gosper's hack over m-subsets of the slot set.
    std::uint64_t mask = (std::uint64_t{1} << m) - 1;
    const std::uint64_t end = std::uint64_t{1} << e;
    while (mask < end) {
      bool ok = true;
      for (int v = 0; v < n && ok; ++v) ok = std::popcount(mask & incident[v]) >= 3;
      if (ok) {
        std::vector<std::uint32_t> adj(n, 0);
        for (std::uint64_t f = mask; f; f &= f - 1) {
          const auto& [a, b] = slots[std::countr_zero(f)];
          adj[a] |= 1u << b;
          adj[b] |= 1u << a;
        }
        if (require_three_connected ? ThreeVertexConnected(n, adj) : ConnectedMasks(n, adj, 0)) {
          MultiGraph g(n);
          for (std::uint64_t f = mask; f; f &= f - 1) {
            const auto& [a, b] = slots[std::countr_zero(f)];
            g.AddEdge(a, b, 1);
          }
          classes.try_emplace(CanonicalLabel(g), std::move(g));
        }
      }
      const std::uint64_t c = mask & (~mask + 1);
      const std::uint64_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  std::vector<MultiGraph> out;
  for (auto& [label, g] : classes) out.push_back(std::move(g));
  return out;
}

std::vector<FractionalSolution> ExtremePointsWithSupport(const MultiGraph& support) {
  if (support.vertex_count() > 24) {
    Fail(ErrorKind::kBoundExceeded, "basis search needs n <= 24");
  }
  return BasisSearch(support).Run();
}

std::string SolutionLabel(const FractionalSolution& x, int max_vertices) {
  std::vector<Rational> distinct;
  for (const auto& [e, v] : x.values()) distinct.push_back(v);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  const int n = x.vertex_count();
  std::vector<std::vector<long>> labels(n, std::vector<long>(n, 0));
  for (const auto& [e, v] : x.values()) {
    const long id = std::lower_bound(distinct.begin(), distinct.end(), v) - distinct.begin() + 1;
    labels[e.first][e.second] = id;
    labels[e.second][e.first] = id;
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < distinct.size(); ++i) os << (i ? "," : "") << distinct[i];
  os << '|' << CanonicalizeLabels(labels, max_vertices).label;
  return os.str();
}

EnumerationResult EnumerateExtremePoints(int n, const EnumerationFilters& filters) {
  if (n < 1) Fail(ErrorKind::kInvalidArgument, "n must be positive");
  if (n > filters.max_n) {
    Fail(ErrorKind::kBoundExceeded, "enumeration bound exceeded: n = " + std::to_string(n) +
                                        " > " + std::to_string(filters.max_n));
  }
  EnumerationResult result;
  result.n = n;
  std::map<std::string, ExtremePointClass> classes;
  const auto graphs = CandidateSupportGraphs(n, filters.require_three_connected);
  result.candidate_graphs = static_cast<long>(graphs.size());
  for (const auto& g : graphs) {
    for (auto& x : ExtremePointsWithSupport(g)) {
      if (!VerifyExtreme(x, 2).extreme) continue;
      std::string label = SolutionLabel(x, std::max(12, n));
      if (classes.count(label)) continue;
      ExtremePointClass c{x, Stats(x), label};
      classes.emplace(std::move(label), std::move(c));
    }
  }
  result.extreme_points = static_cast<long>(classes.size());
  for (auto& [label, c] : classes) {
    if (c.stats.denominator < filters.min_denominator) continue;
    if (c.stats.max_support_degree < filters.min_max_degree) continue;
    result.classes.push_back(std::move(c));
  }
  return result;
}

}  // namespace cutgap
