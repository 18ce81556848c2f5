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

#ifndef CUTGAP_REPORT_HPP_
#define CUTGAP_REPORT_HPP_

#include <string>
#include <vector>

#include "cutgap/cutlp.hpp"
#include "cutgap/rational.hpp"

namespace cutgap {

// Hand-checked extreme points of the degree-bounded relaxation at k = 2 that
// are the unique extremes of some small-n statistic.
struct ExampleSolution {
  std::string name;
  FractionalSolution x;
  Integer denominator;
  int max_degree = 0;
};

std::vector<ExampleSolution> SmallExtremeExamples();

struct ReportOptions {
  int max_gap_t = 6;         // domination gap rows for t = 3..max_gap_t
  int max_fibonacci_t = 8;   // certified construction rows
  int max_directed_t = 4;    // directed fractionality rows
  int enumeration_max_n = 8; // 0 skips enumeration
};

// Machine-readable regression table: every row holds the expected value, the
// computed value and whether they agree.
std::string RegressionReport(const ReportOptions& options);

}  // namespace cutgap

#endif  // CUTGAP_REPORT_HPP_
