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

#include "cutgap/lp.hpp"

#include <cstddef>
#include <limits>

#include "cutgap/error.hpp"

namespace cutgap {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), t_(rows, std::vector<Rational>(cols + 1)),
        z_(cols + 1), basis_(rows, kNone) {}

  Rational& at(std::size_t r, std::size_t c) { return t_[r][c]; }
  Rational& rhs(std::size_t r) { return t_[r][cols_]; }
  std::size_t& basic(std::size_t r) { return basis_[r]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t pivots() const { return pivots_; }

  // Rebuilds the reduced-cost row for cost vector c given the current basis.
  void Price(const std::vector<Rational>& c) {
    for (std::size_t j = 0; j <= cols_; ++j) z_[j] = j < cols_ ? c[j] : Rational(0);
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& cb = c[basis_[r]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (t_[r][j] != 0) z_[j] -= cb * t_[r][j];
      }
    }
  }

  const Rational& reduced_cost(std::size_t j) const { return z_[j]; }
  Rational objective() const { return -z_[cols_]; }

  // Bland's rule. Returns false on unboundedness.
  bool Optimize(const std::vector<bool>& may_enter) {
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (may_enter[j] && z_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      Rational best;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (t_[r][enter] <= 0) continue;
        Rational ratio = t_[r][cols_] / t_[r][enter];
        if (leave == kNone || ratio < best ||
            (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave == kNone) return false;
      Pivot(leave, enter);
    }
  }

  void Pivot(std::size_t r, std::size_t c) {
    ++pivots_;
    auto& prow = t_[r];
    const Rational inv = 1 / prow[c];
    std::vector<std::size_t> nonzero;
    for (std::size_t j = 0; j <= cols_; ++j) {
      if (prow[j] != 0) {
        prow[j] *= inv;
        nonzero.push_back(j);
      }
    }
    auto eliminate = [&](std::vector<Rational>& row) {
      if (row[c] == 0) return;
      const Rational f = row[c];
      for (std::size_t j : nonzero) row[j] -= f * prow[j];
    };
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i != r) eliminate(t_[i]);
    }
    eliminate(z_);
    basis_[r] = c;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::vector<Rational>> t_;
  std::vector<Rational> z_;
  std::vector<std::size_t> basis_;
  std::size_t pivots_ = 0;
};

}  // namespace

const char* ToString(LPStatus status) {
  switch (status) {
    case LPStatus::kOptimal: return "optimal";
    case LPStatus::kInfeasible: return "infeasible";
    case LPStatus::kUnbounded: return "unbounded";
  }
  return "unknown";
}

LPOutcome SolveLP(const LinearProgram& lp) {
  const std::size_t n = lp.objective.size();
  const std::size_t m = lp.constraints.size();
  for (const auto& con : lp.constraints) {
    if (con.row.size() != n) {
      Fail(ErrorKind::kInvalidArgument, "constraint width " + std::to_string(con.row.size()) +
                                            " does not match " + std::to_string(n) +
                                            " variables");
    }
  }
  if (!lp.lower_bounds.empty() && lp.lower_bounds.size() != n) {
    Fail(ErrorKind::kInvalidArgument, "lower bound count does not match variable count");
  }

  // Substitute x_j = l_j + u_j, or x_j = u_j+ - u_j- for a free variable.
  std::vector<Rational> lower(n);
  std::vector<bool> free_var(n, false);
  for (std::size_t j = 0; j < n && !lp.lower_bounds.empty(); ++j) {
    if (lp.lower_bounds[j]) {
      lower[j] = *lp.lower_bounds[j];
    } else {
      free_var[j] = true;
    }
  }
  std::vector<std::size_t> pos_col(n), neg_col(n, kNone);
  std::size_t structural = 0;
  for (std::size_t j = 0; j < n; ++j) {
    pos_col[j] = structural++;
    if (free_var[j]) neg_col[j] = structural++;
  }

  std::vector<Rational> rhs(m);
  std::vector<Sense> sense(m);
  std::vector<int> flip(m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& con = lp.constraints[i];
    rhs[i] = con.rhs;
    for (std::size_t j = 0; j < n; ++j) {
      if (con.row[j] != 0 && lower[j] != 0) rhs[i] -= con.row[j] * lower[j];
    }
    sense[i] = con.sense;
    if (rhs[i] < 0) {
      flip[i] = -1;
      if (sense[i] == Sense::kLessEqual) {
        sense[i] = Sense::kGreaterEqual;
      } else if (sense[i] == Sense::kGreaterEqual) {
        sense[i] = Sense::kLessEqual;
      }
    }
  }

  std::size_t cols = structural;
  std::vector<std::size_t> slack_col(m, kNone), art_col(m, kNone), unit_col(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (sense[i] != Sense::kEqual) slack_col[i] = cols++;
  }
  std::vector<bool> artificial;
  for (std::size_t i = 0; i < m; ++i) {
    if (sense[i] != Sense::kLessEqual) art_col[i] = cols++;
  }
  artificial.assign(cols, false);

  Tableau tab(m, cols);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& con = lp.constraints[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (con.row[j] == 0) continue;
      Rational a = flip[i] < 0 ? Rational(-con.row[j]) : con.row[j];
      tab.at(i, pos_col[j]) = a;
      if (neg_col[j] != kNone) tab.at(i, neg_col[j]) = -a;
    }
    tab.rhs(i) = flip[i] < 0 ? Rational(-rhs[i]) : rhs[i];
    if (slack_col[i] != kNone) {
      tab.at(i, slack_col[i]) = sense[i] == Sense::kLessEqual ? 1 : -1;
    }
    if (art_col[i] != kNone) {
      tab.at(i, art_col[i]) = 1;
      artificial[art_col[i]] = true;
      unit_col[i] = art_col[i];
    } else {
      unit_col[i] = slack_col[i];
    }
    tab.basic(i) = unit_col[i];
  }

  LPOutcome out;

  // Phase 1: drive the artificial variables to zero.
  std::vector<Rational> phase1(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    if (artificial[j]) phase1[j] = 1;
  }
  std::vector<bool> may_enter(cols, true);
  tab.Price(phase1);
  tab.Optimize(may_enter);
  if (tab.objective() != 0) {
    out.status = LPStatus::kInfeasible;
    out.pivots = tab.pivots();
    return out;
  }
  for (std::size_t r = 0; r < m; ++r) {
    if (!artificial[tab.basic(r)]) continue;
    for (std::size_t j = 0; j < cols; ++j) {
      if (!artificial[j] && tab.at(r, j) != 0) {
        tab.Pivot(r, j);
        break;
      }
    }
    // A row whose artificial cannot leave is redundant; it stays basic at 0.
  }

  // Phase 2 on the true objective, minimizing.
  std::vector<Rational> cost(cols);
  for (std::size_t j = 0; j < n; ++j) {
    Rational c = lp.maximize ? Rational(-lp.objective[j]) : lp.objective[j];
    cost[pos_col[j]] = c;
    if (neg_col[j] != kNone) cost[neg_col[j]] = -c;
  }
  for (std::size_t j = 0; j < cols; ++j) may_enter[j] = !artificial[j];
  tab.Price(cost);
  if (!tab.Optimize(may_enter)) {
    out.status = LPStatus::kUnbounded;
    out.pivots = tab.pivots();
    return out;
  }

  std::vector<Rational> u(cols);
  for (std::size_t r = 0; r < m; ++r) u[tab.basic(r)] = tab.rhs(r);
  out.solution.resize(n);
  Rational value;
  for (std::size_t j = 0; j < n; ++j) {
    Rational x = lower[j] + u[pos_col[j]];
    if (neg_col[j] != kNone) x -= u[neg_col[j]];
    value += lp.objective[j] * x;
    out.solution[j] = std::move(x);
  }
  out.duals.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    // y = c_B B^-1 e_i; the unit column of row i has zero cost in phase 2.
    Rational y = -tab.reduced_cost(unit_col[i]);
    if (flip[i] < 0) y = -y;
    if (lp.maximize) y = -y;
    out.duals[i] = std::move(y);
  }
  out.status = LPStatus::kOptimal;
  out.value = std::move(value);
  out.pivots = tab.pivots();
  return out;
}

}  // namespace cutgap
