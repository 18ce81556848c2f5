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

#ifndef CUTGAP_METRIC_HPP_
#define CUTGAP_METRIC_HPP_

#include <cstddef>
#include <vector>

#include "cutgap/graph.hpp"
#include "cutgap/rational.hpp"

namespace cutgap {

struct MetricClosure {
  // Complete graph, one entry per pair u < v in lexicographic order, costed by
  // shortest-path distance.
  MultiGraph complete;
  std::vector<std::vector<Rational>> distance;
  // Edge entries of the original graph along a shortest u-v path.
  std::vector<std::vector<std::vector<std::size_t>>> path;

  std::size_t EntryOf(VertexId u, VertexId v) const;
};

MetricClosure ComputeMetricClosure(const MultiGraph& g);

// Replaces every closure edge of f (a multiset over closure.complete) with
// its shortest path in g. The cost is unchanged.
EdgeMultiset ExpandToPaths(const MultiGraph& g, const MetricClosure& closure,
                           const EdgeMultiset& f);

// Inclusion-minimal k-edge-connected sub-multiset. Copies are tried for
// removal once each, by descending cost and then ascending entry index.
EdgeMultiset Minimalize(const MultiGraph& base, const EdgeMultiset& f, int k);

struct ConversionResult {
  EdgeMultiset edges;   // every count is 0 or 1, at most one entry per pair
  int replacements = 0;
  Rational input_cost;
  Rational output_cost;
};

// Turns a 2-edge-connected multi-subgraph of a metric graph into a simple
// 2-edge-connected subgraph of no larger cost. Every vertex pair needs an
// entry in base, since a replacement edge may join any two vertices.
ConversionResult EcsmToEcss(const MultiGraph& base, const EdgeMultiset& f);

}  // namespace cutgap

#endif  // CUTGAP_METRIC_HPP_
