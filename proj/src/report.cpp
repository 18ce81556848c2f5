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

#include "cutgap/report.hpp"

#include <algorithm>
#include <tuple>

#include "cutgap/extreme.hpp"
#include "cutgap/gap.hpp"
#include "json.hpp"

namespace cutgap {

namespace {

using nlohmann::json;

struct ExampleEntry {
  const char* name;
  int n;
  int denominator;
  int max_degree;
  std::vector<std::tuple<int, int, const char*>> entries;
};

const std::vector<ExampleEntry>& ExampleTable() {
  static const std::vector<ExampleEntry> table = {
      {"denominator-2-n6", 6, 2, 3,
       {{3, 2, "1"}, {4, 5, "1"}, {1, 0, "1"}, {2, 1, "1/2"}, {1, 4, "1/2"}, {4, 2, "1/2"},
        {3, 0, "1/2"}, {0, 5, "1/2"}, {5, 3, "1/2"}}},
      {"max-degree-4-n7", 7, 2, 4,
       {{2, 5, "1"}, {5, 6, "1/2"}, {6, 4, "1"}, {4, 1, "1/2"}, {1, 0, "1"}, {0, 2, "1/2"},
        {2, 3, "1/2"}, {5, 3, "1/2"}, {3, 4, "1/2"}, {3, 1, "1/2"}, {0, 6, "1/2"}}},
      {"denominator-3-n8", 8, 3, 4,
       {{1, 7, "1"}, {7, 6, "1/3"}, {6, 0, "1"}, {0, 1, "2/3"}, {1, 2, "1/3"}, {2, 3, "1"},
        {3, 5, "2/3"}, {5, 4, "1"}, {4, 2, "1/3"}, {2, 0, "1/3"}, {3, 7, "1/3"}, {7, 5, "1/3"},
        {4, 6, "2/3"}}},
      {"max-degree-5-n9", 9, 3, 5,
       {{0, 7, "1"}, {7, 8, "1/3"}, {8, 4, "1/3"}, {8, 6, "1/3"}, {7, 3, "2/3"}, {3, 6, "1"},
        {6, 1, "2/3"}, {1, 3, "1/3"}, {1, 2, "1/3"}, {2, 5, "2/3"}, {5, 1, "1/3"}, {5, 8, "1"},
        {4, 2, "1"}, {4, 0, "2/3"}, {0, 1, "1/3"}}},
      {"denominator-4-n9", 9, 4, 4,
       {{6, 1, "1"}, {1, 0, "3/4"}, {0, 7, "1/2"}, {7, 8, "1"}, {8, 6, "1/4"}, {6, 5, "3/4"},
        {5, 8, "1/4"}, {7, 3, "1/2"}, {3, 0, "1/2"}, {0, 2, "1/4"}, {2, 1, "1/4"}, {5, 2, "1"},
        {2, 4, "1/2"}, {4, 3, "1"}, {4, 8, "1/2"}}},
      {"denominator-5-max-degree-5-n10", 10, 5, 5,
       {{4, 2, "1/5"}, {4, 0, "1/5"}, {4, 5, "1"}, {4, 7, "2/5"}, {4, 9, "1/5"}, {0, 1, "1"},
        {1, 2, "4/5"}, {2, 3, "1"}, {3, 5, "2/5"}, {5, 6, "3/5"}, {6, 7, "1"}, {7, 8, "3/5"},
        {8, 9, "1"}, {9, 0, "4/5"}, {1, 8, "1/5"}, {8, 3, "1/5"}, {3, 6, "2/5"}}},
  };
  return table;
}

json Row(const std::string& claim, const std::string& expected, const std::string& computed,
         bool match) {
  return {{"claim", claim}, {"expected", expected}, {"computed", computed}, {"match", match}};
}

}  // namespace

std::vector<ExampleSolution> SmallExtremeExamples() {
  std::vector<ExampleSolution> out;
  for (const auto& entry : ExampleTable()) {
    ExampleSolution ex{entry.name, FractionalSolution(entry.n), entry.denominator, entry.max_degree};
    for (const auto& [u, v, value] : entry.entries) ex.x.Set(u, v, ParseRational(value));
    out.push_back(std::move(ex));
  }
  return out;
}

std::string RegressionReport(const ReportOptions& options) {
  json doc;
  bool all = true;
  auto add = [&](const char* section, json row) {
    all = all && row["match"].get<bool>();
    doc[section].push_back(std::move(row));
  };

  static const char* kGapText[] = {"9/8", "23/21", "22/20", "35/32"};
  doc["domination_gap"] = json::array();
  for (int t = 3; t <= options.max_gap_t; ++t) {
    GapResult gap = DominationGap(ConstructFibonacci(t));
    json row;
    if (t <= 6) {
      const Rational expected = ParseRational(kGapText[t - 3]);
      row = Row("domination gap of the t = " + std::to_string(t) + " construction",
                kGapText[t - 3], ToString(gap.t), gap.t == expected);
    } else {
      row = Row("domination gap of the t = " + std::to_string(t) + " construction", "",
                ToString(gap.t), true);
    }
    row["t"] = t;
    row["columns"] = gap.columns;
    add("domination_gap", std::move(row));
  }

  doc["construction"] = json::array();
  for (int t = 3; t <= options.max_fibonacci_t; ++t) {
    FractionalSolution x = ConstructFibonacci(t);
    SolutionStats s = Stats(x);
    const Integer f = Fibonacci(t);
    LaminarFamily family = CanonicalLaminarFamily(t);
    const bool certified = VerifyExtreme(x, 2, &family).extreme;
    const std::string expected = "certified, fractionality 1/" + f.get_str() + ", denominator " +
                                 f.get_str() + ", max degree " + std::to_string(t) + ", " +
                                 std::to_string(2 * t) + " vertices, " +
                                 std::to_string(4 * t - 3) + " edges";
    const std::string computed =
        std::string(certified ? "certified" : "not certified") + ", fractionality " +
        ToString(s.fractionality) + ", denominator " + s.denominator.get_str() +
        ", max degree " + std::to_string(s.max_support_degree) + ", " + std::to_string(s.n) +
        " vertices, " + std::to_string(s.support_edges) + " edges";
    json row = Row("extreme point of the t = " + std::to_string(t) + " construction", expected,
                   computed, expected == computed);
    row["t"] = t;
    add("construction", std::move(row));
  }

  doc["directed_fractionality"] = json::array();
  for (int t = 3; t <= options.max_directed_t; ++t) {
    DirectedFaceResult face = DirectedFaceExtreme(ConstructFibonacci(t));
    Rational expected(Integer(1), Fibonacci(t));
    json row = Row("smallest positive arc of a directed face vertex, t = " + std::to_string(t),
                   ToString(expected), ToString(face.min_positive), face.min_positive == expected);
    row["t"] = t;
    add("directed_fractionality", std::move(row));
  }

  doc["examples"] = json::array();
  for (const auto& ex : SmallExtremeExamples()) {
    SolutionStats s = Stats(ex.x);
    const bool certified = VerifyExtreme(ex.x, 2).extreme;
    const std::string expected =
        "certified, denominator " + ex.denominator.get_str() + ", max degree " +
        std::to_string(ex.max_degree);
    const std::string computed = std::string(certified ? "certified" : "not certified") +
                                 ", denominator " + s.denominator.get_str() + ", max degree " +
                                 std::to_string(s.max_support_degree);
    add("examples", Row(ex.name, expected, computed, expected == computed));
  }

  doc["enumeration"] = json::array();
  if (options.enumeration_max_n > 0) {
    EnumerationFilters filters;
    filters.max_n = std::max(filters.max_n, options.enumeration_max_n);
    std::vector<ExtremePointClass> found;
    for (int n = 4; n <= options.enumeration_max_n; ++n) {
      EnumerationResult points = EnumerateExtremePoints(n, filters);
      json row = Row("extreme point classes on " + std::to_string(n) + " vertices", "",
                     std::to_string(points.classes.size()), true);
      row["n"] = n;
      row["candidate_graphs"] = points.candidate_graphs;
      add("enumeration", std::move(row));
      found.insert(found.end(), points.classes.begin(), points.classes.end());
    }
    const auto examples = SmallExtremeExamples();
    // Unique extreme of a statistic over n <= max_n, compared with the
    // expected solution up to isomorphism.
    auto unique_claim = [&](int max_n, const std::string& what, auto&& qualifies,
                            const FractionalSolution& expected) {
      if (options.enumeration_max_n < max_n) return;
      long count = 0;
      std::string label;
      for (const auto& c : found) {
        if (c.stats.n <= max_n && qualifies(c.stats)) {
          ++count;
          label = c.label;
        }
      }
      const bool same = count == 1 && label == SolutionLabel(expected);
      add("enumeration", Row("classes with " + what + " for n <= " + std::to_string(max_n),
                             "1, isomorphic to the expected solution",
                             std::to_string(count) + (same ? ", isomorphic to the expected solution"
                                                           : ", not the expected solution"),
                             same));
    };
    unique_claim(6, "denominator >= 2", [](const SolutionStats& s) { return s.denominator >= 2; },
                 ConstructFibonacci(3));
    unique_claim(7, "max degree >= 4", [](const SolutionStats& s) { return s.max_support_degree >= 4; },
                 examples[1].x);
    unique_claim(8, "denominator >= 3", [](const SolutionStats& s) { return s.denominator >= 3; },
                 examples[2].x);
  }

  doc["all_match"] = all;
  return doc.dump(2) + "\n";
}

}  // namespace cutgap
