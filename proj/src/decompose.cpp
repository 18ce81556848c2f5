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

#include "cutgap/decompose.hpp"

#include <algorithm>
#include <stdexcept>

#include "cutgap/error.hpp"

namespace cutgap {

namespace {

// Fewest edges of a k-edge-connected spanning subgraph on n vertices.
long EdgesNeeded(int n, int k) {
  if (n < 2) return 0;
  return std::max<long>(n - 1, (static_cast<long>(k) * n + 1) / 2);
}

class Splitter {
 public:
  Splitter(const MultiGraph& g, int a, int b) : g_(g), a_(a), b_(b) {
    assign_.assign(g.edge_count(), 0);
  }

  bool Run(SplitResult& out) {
    const bool found = Visit(0);
    out.nodes = nodes_;
    if (found) {
      out.part_a = assign_;
      out.part_b.resize(assign_.size());
      for (std::size_t i = 0; i < assign_.size(); ++i) {
        out.part_b[i] = g_.edges()[i].multiplicity - assign_[i];
      }
    }
    return found;
  }

 private:
  // Upper bounds on each part: decided copies plus everything undecided.
  bool Promising(std::size_t next) const {
    MultiGraph upper_a(g_.vertex_count());
    MultiGraph upper_b(g_.vertex_count());
    for (std::size_t i = 0; i < assign_.size(); ++i) {
      const Edge& e = g_.edges()[i];
      const int to_a = i < next ? assign_[i] : e.multiplicity;
      const int to_b = i < next ? e.multiplicity - assign_[i] : e.multiplicity;
      if (to_a > 0) upper_a.AddEdge(e.u, e.v, 0, to_a);
      if (to_b > 0) upper_b.AddEdge(e.u, e.v, 0, to_b);
    }
    return IsKEdgeConnected(upper_a, a_) && IsKEdgeConnected(upper_b, b_);
  }

  bool Visit(std::size_t i) {
    ++nodes_;
    if (!Promising(i)) return false;
    if (i == assign_.size()) return true;
    const int mu = g_.edges()[i].multiplicity;
    for (int c = mu; c >= 0; --c) {
      // Swapping the parts maps c to mu - c when a == b.
      if (i == 0 && a_ == b_ && c < mu - c) continue;
      assign_[i] = c;
      if (Visit(i + 1)) return true;
    }
    assign_[i] = 0;
    return false;
  }

  const MultiGraph& g_;
  int a_;
  int b_;
  EdgeMultiset assign_;
  long nodes_ = 0;
};

}  // namespace

SplitResult SplitSearch(const MultiGraph& g, int a, int b) {
  if (a < 1 || b < 1) Fail(ErrorKind::kInvalidArgument, "a and b must be at least 1");
  if (g.TotalMultiplicity() > 30) {
    Fail(ErrorKind::kBoundExceeded, "split search needs total multiplicity <= 30, got " +
                                        std::to_string(g.TotalMultiplicity()));
  }
  SplitResult result;
  const int n = g.vertex_count();
  if (g.TotalMultiplicity() < EdgesNeeded(n, a) + EdgesNeeded(n, b)) return result;
  Splitter splitter(g, a, b);
  result.feasible = splitter.Run(result);
  if (result.feasible) {
    if (!IsKEdgeConnected(SubgraphOf(g, result.part_a), a) ||
        !IsKEdgeConnected(SubgraphOf(g, result.part_b), b)) {
      throw std::logic_error("split witness fails its connectivity check");
    }
  }
  return result;
}

LowerBoundWitness FLowerWitness(int a, int b, const MultiGraph& g) {
  if (a < 1 || b < 1) Fail(ErrorKind::kInvalidArgument, "a and b must be at least 1");
  if (g.vertex_count() < 2) Fail(ErrorKind::kInvalidArgument, "witness needs at least 2 vertices");
  LowerBoundWitness w;
  w.connectivity = EdgeConnectivity(g);
  if (w.connectivity < a + b - 1) {
    std::vector<Rational> weights;
    for (const auto& e : g.edges()) weights.emplace_back(e.multiplicity);
    w.violated_cut = GlobalMinCut(g, weights);
    w.reason = "graph is only " + std::to_string(w.connectivity) + "-edge-connected, below " +
               std::to_string(a + b - 1);
    return w;
  }
  SplitResult split = SplitSearch(g, a, b);
  if (split.feasible) {
    w.split = std::move(split);
    w.reason = "graph splits";
    return w;
  }
  w.verified = true;
  w.bound = w.connectivity + 1;
  return w;
}

Rational SplittingGapBound(int c, int k, int t, int n) {
  if (c < 0 || k < 1 || t < 1 || n < 0) {
    Fail(ErrorKind::kInvalidArgument, "need c >= 0, k >= 1, t >= 1, n >= 0");
  }
  if (n > 4096) Fail(ErrorKind::kBoundExceeded, "n must be at most 4096");
  Integer power;
  mpz_ui_pow_ui(power.get_mpz_t(), 2, static_cast<unsigned long>(n));
  Rational inner(Integer(power * (k + c) - c), Integer(t) * k);
  inner.canonicalize();
  Rational value(Ceil(inner) * t, power);
  value.canonicalize();
  Rational slack(c, k);
  slack.canonicalize();
  Rational tail(Integer(t), power);
  tail.canonicalize();
  Rational limit = 1 + slack + tail;
  if (value > limit) throw std::logic_error("splitting bound exceeds 1 + c/k + t/2^n");
  return value;
}

}  // namespace cutgap
