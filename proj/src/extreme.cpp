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
#include <limits>

#include "cutgap/error.hpp"
#include "cutgap/extreme.hpp"
#include "cutgap/linalg.hpp"

namespace cutgap {

Integer Fibonacci(int i) {
  if (i < 1) Fail(ErrorKind::kInvalidArgument, "Fibonacci index must be >= 1");
  Integer a = 1, b = 1;
  for (int j = 3; j <= i; ++j) {
    Integer c = a + b;
    a = b;
    b = c;
  }
  return b;
}

FractionalSolution ConstructFibonacci(int t) {
  if (t < 3) Fail(ErrorKind::kInvalidArgument, "Fibonacci construction needs t >= 3");
  const Rational ft(Fibonacci(t));
  auto frac = [&](int i) -> Rational { return Rational(Fibonacci(i)) / ft; };
  FractionalSolution x(2 * t);
  // Vertex labels below are 1-based as in the construction list.
  auto put = [&](int a, int b, const Rational& value) {
    if (x.Get(a - 1, b - 1) != 0) {
      Fail(ErrorKind::kDomain, "construction produced a repeated edge");
    }
    x.Set(a - 1, b - 1, value);
  };
  for (int i = 1; i <= t; ++i) put(2 * i - 1, 2 * i, 1);
  for (int i = 2; i <= t - 1; ++i) put(1, 2 * i, frac(t - i));
  put(1, 2 * t, 1 / ft);
  for (int i = 3; i <= t; ++i) put(2 * i - 3, 2 * i - 1, frac(t - i + 1));
  for (int i = 3; i <= t; ++i) put(2 * i - 4, 2 * i - 1, 1 - frac(t - i + 2));
  put(2, 3, frac(t - 1));
  put(2 * t - 2, 2 * t, 1 - 1 / ft);
  return x;
}

bool LaminarFamily::IsLaminar() const {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (sets[i].Crosses(sets[j])) return false;
    }
  }
  return true;
}

LaminarFamily CanonicalLaminarFamily(int t) {
  if (t < 3) Fail(ErrorKind::kInvalidArgument, "laminar family needs t >= 3");
  const int n = 2 * t;
  LaminarFamily family;
  family.n = n;
  for (int i = 1; i <= n; ++i) family.sets.push_back(CutSet(n, {i - 1}).Normalized());
  for (int i = 1; i <= t; ++i) {
    family.sets.push_back(CutSet(n, {2 * i - 2, 2 * i - 1}).Normalized());
  }
  for (int i = 2; i <= t - 2; ++i) {
    CutSet prefix(n);
    for (int v = 0; v < 2 * i; ++v) prefix.insert(v);
    family.sets.push_back(prefix.Normalized());
  }
  return family;
}

SolutionStats Stats(const FractionalSolution& x) {
  SolutionStats s;
  s.n = x.vertex_count();
  s.support_edges = static_cast<int>(x.support_size());
  s.denominator = 1;
  std::vector<int> degree(x.vertex_count(), 0);
  bool first = true;
  for (const auto& [e, v] : x.values()) {
    if (first || v < s.fractionality) s.fractionality = v;
    first = false;
    s.denominator = Lcm(s.denominator, v.get_den());
    ++degree[e.first];
    ++degree[e.second];
  }
  for (int d : degree) s.max_support_degree = std::max(s.max_support_degree, d);
  return s;
}

Rational TightCrossValue(const FractionalSolution& x, const CutSet& s, const CutSet& t) {
  if (s.Intersects(t)) Fail(ErrorKind::kInvalidArgument, "sets overlap: " + s.ToString() +
                                                             " and " + t.ToString());
  return x.CrossValue(s, t);
}

namespace {

// Gray-code walk over all normalized cuts with integer-scaled weights.
template <typename W>
std::vector<std::uint64_t> TightMasks(int n, const std::vector<std::vector<std::pair<int, W>>>& adj,
                                      const W& target) {
  std::vector<std::uint64_t> out;
  std::uint64_t in_set = 0;
  W value{};
  const std::uint64_t limit = std::uint64_t{1} << (n - 1);
  for (std::uint64_t i = 1; i < limit; ++i) {
    const int v = std::countr_zero(i) + 1;
    const bool entering = !((in_set >> v) & 1u);
    for (const auto& [u, w] : adj[v]) {
      const bool u_in = (in_set >> u) & 1u;
      if (entering == u_in) {
        value -= w;
      } else {
        value += w;
      }
    }
    in_set ^= std::uint64_t{1} << v;
    if (value == target) out.push_back(in_set);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rational> CutRowOverSupport(const std::vector<VertexPair>& vars, const CutSet& s) {
  std::vector<Rational> row(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (s.contains(vars[i].first) != s.contains(vars[i].second)) row[i] = 1;
  }
  return row;
}

LaminarFamily MaximalLaminarSubfamily(int n, std::vector<CutSet> sets) {
  std::stable_sort(sets.begin(), sets.end(), [](const CutSet& a, const CutSet& b) {
    return a.count() < b.count();
  });
  LaminarFamily family;
  family.n = n;
  for (const auto& s : sets) {
    bool ok = true;
    for (const auto& chosen : family.sets) {
      if (s.Crosses(chosen)) {
        ok = false;
        break;
      }
    }
    if (ok) family.sets.push_back(s);
  }
  return family;
}

}  // namespace

std::vector<CutSet> TightCuts(const FractionalSolution& x, const Rational& k, int max_n) {
  const int n = x.vertex_count();
  if (n > max_n || n > 63) {
    Fail(ErrorKind::kBoundExceeded, "cut enumeration bound exceeded: n = " + std::to_string(n));
  }
  if (n < 2) return {};
  std::vector<Rational> all;
  for (const auto& [e, v] : x.values()) all.push_back(v);
  all.push_back(k);
  const Integer scale = CommonDenominator(all);
  Integer total(k * scale);
  for (const auto& [e, v] : x.values()) total += Integer(v * scale);

  std::vector<std::uint64_t> masks;
  if (total.fits_slong_p() && total < (Integer(1) << 60)) {
    std::vector<std::vector<std::pair<int, long>>> adj(n);
    for (const auto& [e, v] : x.values()) {
      const long w = Integer(v * scale).get_si();
      adj[e.first].emplace_back(e.second, w);
      adj[e.second].emplace_back(e.first, w);
    }
    masks = TightMasks<long>(n, adj, Integer(k * scale).get_si());
  } else {
    std::vector<std::vector<std::pair<int, Rational>>> adj(n);
    for (const auto& [e, v] : x.values()) {
      adj[e.first].emplace_back(e.second, v);
      adj[e.second].emplace_back(e.first, v);
    }
    masks = TightMasks<Rational>(n, adj, k);
  }
  std::vector<CutSet> out;
  out.reserve(masks.size());
  for (auto m : masks) out.push_back(CutSet::FromMask(n, m));
  return out;
}

const char* ToString(VerifyStage stage) {
  switch (stage) {
    case VerifyStage::kCertified: return "certified";
    case VerifyStage::kInfeasible: return "infeasible";
    case VerifyStage::kNotUnique: return "not-unique";
  }
  return "unknown";
}

ExtremenessResult VerifyExtreme(const FractionalSolution& x, int k, const LaminarFamily* hint) {
  const int n = x.vertex_count();
  ExtremenessResult result;

  auto feasibility = CheckFeasibility(x, k, LPVariant::kBounded);
  if (!feasibility.feasible) {
    ExtremenessRefutation ref;
    ref.stage = VerifyStage::kInfeasible;
    ref.violated_cut = feasibility.violated_cut;
    ref.violated_degree = feasibility.violated_degree;
    result.refutation = std::move(ref);
    return result;
  }

  ExtremenessCertificate cert;
  if (n >= 2) {
    auto [side, value] = StoerWagner(x.WeightMatrix());
    cert.min_cut = CutSet::FromMembers(n, side).Normalized();
    cert.min_cut_value = value;
  }
  for (const auto& [e, v] : x.values()) cert.variables.push_back(e);
  const std::size_t m = cert.variables.size();
  const Rational target(k);

  if (hint != nullptr && hint->n == n) {
    bool all_tight = true;
    RationalMatrix rows(0, m);
    for (const auto& s : hint->sets) {
      if (!s.IsProper() || x.CutValue(s) != target) {
        all_tight = false;
        break;
      }
      rows.AppendRow(CutRowOverSupport(cert.variables, s));
    }
    if (all_tight && Rank(rows) == m) {
      cert.tight_family = *hint;
      cert.tight_cuts = hint->sets;
      cert.tight_rows = rows.rows();
      cert.rank = m;
      cert.laminar_rank = m;
      cert.used_family_hint = true;
      result.extreme = true;
      result.certificate = std::move(cert);
      return result;
    }
  }

  cert.tight_cuts = TightCuts(x, target);
  RationalMatrix rows(0, m);
  for (const auto& s : cert.tight_cuts) rows.AppendRow(CutRowOverSupport(cert.variables, s));
  cert.tight_rows = rows.rows();
  cert.rank = Rank(rows);

  if (cert.rank == m) {
    cert.tight_family = MaximalLaminarSubfamily(n, cert.tight_cuts);
    RationalMatrix laminar_rows(0, m);
    for (const auto& s : cert.tight_family.sets) {
      laminar_rows.AppendRow(CutRowOverSupport(cert.variables, s));
    }
    cert.laminar_rank = Rank(laminar_rows);
    result.extreme = true;
    result.certificate = std::move(cert);
    return result;
  }

  // Not unique: step along a nullspace direction in both senses, by half the
  // largest step that keeps every constraint satisfied.
  auto direction = NullspaceVector(rows);
  if (!direction) Fail(ErrorKind::kDomain, "rank deficit without a nullspace vector");
  const auto& d = *direction;
  std::optional<Rational> limit;
  auto consider = [&](const Rational& slack, const Rational& rate) {
    if (rate == 0) return;
    Rational r = slack / abs(rate);
    if (!limit || r < *limit) limit = r;
  };
  for (std::size_t i = 0; i < m; ++i) {
    consider(x.Get(cert.variables[i].first, cert.variables[i].second), d[i]);
  }
  if (n > 24) Fail(ErrorKind::kBoundExceeded, "cut enumeration bound exceeded");
  const std::uint64_t limit_mask = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 1; mask < limit_mask; ++mask) {
    CutSet s = CutSet::FromMask(n, mask << 1);
    Rational slack = x.CutValue(s) - target;
    if (slack == 0) continue;
    const auto row = CutRowOverSupport(cert.variables, s);
    Rational rate;
    for (std::size_t i = 0; i < m; ++i) {
      if (row[i] != 0) rate += d[i];
    }
    consider(slack, rate);
  }
  const Rational eps = *limit / 2;
  FractionalSolution plus(n), minus(n);
  for (std::size_t i = 0; i < m; ++i) {
    const auto [u, v] = cert.variables[i];
    plus.Set(u, v, x.Get(u, v) + eps * d[i]);
    minus.Set(u, v, x.Get(u, v) - eps * d[i]);
  }
  if (!CheckFeasible(plus, k, LPVariant::kBounded) ||
      !CheckFeasible(minus, k, LPVariant::kBounded)) {
    Fail(ErrorKind::kDomain, "perturbed points left the polytope");
  }
  ExtremenessRefutation ref;
  ref.stage = VerifyStage::kNotUnique;
  ref.plus = std::move(plus);
  ref.minus = std::move(minus);
  ref.rank = cert.rank;
  ref.variables = m;
  result.refutation = std::move(ref);
  return result;
}

}  // namespace cutgap
