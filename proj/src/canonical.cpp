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
#include <map>
#include <sstream>

#include "cutgap/graph.hpp"

namespace cutgap {
namespace {

using LabelMatrix = std::vector<std::vector<long>>;

// Colour refinement; colours are ranks of sorted signatures, so the result
// depends only on the isomorphism class.
std::vector<int> RefineColours(const LabelMatrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> colour(n, 0);
  int classes = 1;
  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<long>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<std::pair<long, long>> nbr;
      for (int u = 0; u < n; ++u) {
        if (u != v && m[v][u] != 0) nbr.emplace_back(m[v][u], colour[u]);
      }
      std::sort(nbr.begin(), nbr.end());
      sig[v].push_back(colour[v]);
      for (const auto& [label, c] : nbr) {
        sig[v].push_back(label);
        sig[v].push_back(c);
      }
    }
    std::vector<std::vector<long>> distinct(sig);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v) {
      colour[v] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    }
    const int next = static_cast<int>(distinct.size());
    if (next == classes) break;
    classes = next;
  }
  return colour;
}

class CanonicalSearch {
 public:
  CanonicalSearch(const LabelMatrix& m, std::vector<int> colour)
      : m_(m), n_(static_cast<int>(m.size())), colour_(std::move(colour)) {
    slot_colour_ = colour_;
    std::sort(slot_colour_.begin(), slot_colour_.end());
    used_.assign(n_, false);
  }

  void Run() { Extend(0, false); }

  const std::vector<VertexId>& best_order() const { return best_order_; }
  const std::vector<long>& best_sequence() const { return best_seq_; }

 private:
  // Prefix is compared against best_seq_ column by column; `tied` says the
  // prefix so far equals the best prefix.
  void Extend(int depth, bool tied) {
    if (depth == n_) {
      if (!have_best_ || !tied) {
        best_seq_ = seq_;
        best_order_ = order_;
        have_best_ = true;
        ++updates_;
      }
      return;
    }
    const std::size_t col_start = static_cast<std::size_t>(depth) * (depth - 1) / 2;
    for (int v = 0; v < n_; ++v) {
      if (used_[v] || colour_[v] != slot_colour_[depth]) continue;
      std::vector<long> column(depth);
      for (int i = 0; i < depth; ++i) column[i] = m_[order_[i]][v];
      bool child_tied = false;
      if (have_best_ && tied) {
        auto best_col = best_seq_.begin() + static_cast<std::ptrdiff_t>(col_start);
        auto cmp = std::lexicographical_compare_three_way(
            column.begin(), column.end(), best_col, best_col + depth);
        if (cmp < 0) continue;
        child_tied = cmp == 0;
      }
      const auto before = updates_;
      used_[v] = true;
      order_.push_back(v);
      seq_.insert(seq_.end(), column.begin(), column.end());
      Extend(depth + 1, child_tied);
      seq_.resize(seq_.size() - column.size());
      order_.pop_back();
      used_[v] = false;
      // A new best extends the current prefix, so this prefix now ties it.
      if (updates_ != before) tied = true;
    }
  }

  const LabelMatrix& m_;
  int n_;
  std::vector<int> colour_;
  std::vector<int> slot_colour_;
  std::vector<bool> used_;
  std::vector<VertexId> order_;
  std::vector<long> seq_;
  std::vector<VertexId> best_order_;
  std::vector<long> best_seq_;
  bool have_best_ = false;
  long updates_ = 0;
};

}  // namespace

CanonicalForm CanonicalizeLabels(const LabelMatrix& labels, int max_vertices) {
  const int n = static_cast<int>(labels.size());
  if (n > max_vertices) {
    Fail(ErrorKind::kBoundExceeded, "canonicalization bound exceeded: n = " + std::to_string(n) +
                                        " > " + std::to_string(max_vertices));
  }
  CanonicalSearch search(labels, RefineColours(labels));
  search.Run();
  std::ostringstream os;
  os << n << ':';
  for (std::size_t i = 0; i < search.best_sequence().size(); ++i) {
    if (i) os << ',';
    os << search.best_sequence()[i];
  }
  return {os.str(), search.best_order()};
}

std::string CanonicalLabel(const MultiGraph& g, int max_vertices) {
  return CanonicalizeLabels(g.MultiplicityMatrix(), max_vertices).label;
}

}  // namespace cutgap
