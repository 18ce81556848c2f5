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

#ifndef CUTGAP_LP_HPP_
#define CUTGAP_LP_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "cutgap/rational.hpp"

namespace cutgap {

enum class Sense { kLessEqual, kEqual, kGreaterEqual };

struct LinearConstraint {
  std::vector<Rational> row;
  Sense sense = Sense::kGreaterEqual;
  Rational rhs;
};

// min (or max) c.x subject to the constraints and x_j >= lower_j. A missing
// lower bound (nullopt) makes the variable free. An empty lower_bounds vector
// means every variable is nonnegative.
struct LinearProgram {
  std::vector<Rational> objective;
  bool maximize = false;
  std::vector<LinearConstraint> constraints;
  std::vector<std::optional<Rational>> lower_bounds;
};

enum class LPStatus { kOptimal, kInfeasible, kUnbounded };

struct LPOutcome {
  LPStatus status = LPStatus::kInfeasible;
  Rational value;
  std::vector<Rational> solution;
  // One multiplier y_i per constraint, certifying optimality: for a
  // minimization c_j - y.A_j >= 0 on every nonnegative variable and >= rows
  // carry y_i >= 0; for a maximization the inequalities flip.
  std::vector<Rational> duals;
  std::size_t pivots = 0;
};

// Exact two-phase primal simplex with Bland's rule. The returned solution is
// a basic feasible solution of the program as given.
LPOutcome SolveLP(const LinearProgram& lp);

const char* ToString(LPStatus status);

}  // namespace cutgap

#endif  // CUTGAP_LP_HPP_
