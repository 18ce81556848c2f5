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

#include "cutgap/linalg.hpp"

#include <utility>

#include "cutgap/error.hpp"

namespace cutgap {
namespace {

using IntegerRows = std::vector<std::vector<Integer>>;

// Scales every row by the lcm of its denominators; rank and solution set are
// unchanged.
IntegerRows ScaleToIntegers(const RationalMatrix& m, const std::vector<Rational>* rhs) {
  const std::size_t width = m.cols() + (rhs ? 1 : 0);
  IntegerRows out(m.rows(), std::vector<Integer>(width));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer d = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) d = Lcm(d, m(r, c).get_den());
    if (rhs) d = Lcm(d, (*rhs)[r].get_den());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out[r][c] = m(r, c).get_num() * (d / m(r, c).get_den());
    }
    if (rhs) out[r][m.cols()] = (*rhs)[r].get_num() * (d / (*rhs)[r].get_den());
  }
  return out;
}

// In-place Bareiss forward elimination using pivot columns [0, pivot_cols).
// Returns the pivot column of each echelon row.
std::vector<std::size_t> Bareiss(IntegerRows& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t width = m.front().size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      for (std::size_t j = c + 1; j < width; ++j) {
        Integer v = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RationalMatrix RationalMatrix::FromRows(const std::vector<std::vector<Rational>>& rows,
                                        std::size_t cols) {
  RationalMatrix m(0, cols);
  for (const auto& row : rows) m.AppendRow(row);
  return m;
}

std::vector<Rational> RationalMatrix::Row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

void RationalMatrix::AppendRow(const std::vector<Rational>& row) {
  if (row.size() != cols_) Fail(ErrorKind::kInvalidArgument, "row width mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

std::size_t Rank(const RationalMatrix& m) {
  IntegerRows rows = ScaleToIntegers(m, nullptr);
  return Bareiss(rows, m.cols()).size();
}

LinearSolveResult SolveUnique(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (a.rows() != b.size()) {
    Fail(ErrorKind::kInvalidArgument, "dimension mismatch: matrix has " +
                                          std::to_string(a.rows()) + " rows, rhs has " +
                                          std::to_string(b.size()));
  }
  const std::size_t n = a.cols();
  IntegerRows rows = ScaleToIntegers(a, &b);
  const auto pivots = Bareiss(rows, n);
  LinearSolveResult result;
  for (std::size_t i = pivots.size(); i < rows.size(); ++i) {
    if (rows[i][n] != 0) {
      result.kind = LinearSolveResult::Kind::kInconsistent;
      return result;
    }
  }
  if (pivots.size() < n) {
    result.kind = LinearSolveResult::Kind::kNotUnique;
    return result;
  }
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = rows[i][n];
    for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(rows[i][j]) * x[j];
    x[i] = acc / Rational(rows[i][i]);
  }
  result.kind = LinearSolveResult::Kind::kUnique;
  result.solution = std::move(x);
  return result;
}

std::optional<std::vector<Rational>> NullspaceVector(const RationalMatrix& a) {
  const std::size_t n = a.cols();
  std::vector<std::vector<Rational>> m;
  for (std::size_t r = 0; r < a.rows(); ++r) m.push_back(a.Row(r));
  // Reduced row echelon form.
  std::vector<std::size_t> pivot_of_row;
  std::vector<bool> is_pivot(n, false);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = 0; j < n; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_of_row.push_back(c);
    is_pivot[c] = true;
    ++r;
  }
  std::size_t free_col = n;
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) {
      free_col = c;
      break;
    }
  }
  if (free_col == n) return std::nullopt;
  std::vector<Rational> d(n);
  d[free_col] = 1;
  for (std::size_t i = 0; i < pivot_of_row.size(); ++i) {
    d[pivot_of_row[i]] = -m[i][free_col];
  }
  return d;
}

std::vector<Rational> Multiply(const RationalMatrix& a, const std::vector<Rational>& x) {
  if (a.cols() != x.size()) Fail(ErrorKind::kInvalidArgument, "dimension mismatch");
  std::vector<Rational> out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (a(r, c) != 0) out[r] += a(r, c) * x[c];
    }
  }
  return out;
}

void RowSpan::Reduce(std::vector<Rational>& row) const {
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (row[p] == 0) continue;
    const Rational f = row[p];
    for (std::size_t j = 0; j < cols_; ++j) {
      if (basis_[k][j] != 0) row[j] -= f * basis_[k][j];
    }
  }
}

bool RowSpan::IsIndependent(std::vector<Rational> row) const {
  Reduce(row);
  for (const auto& v : row) {
    if (v != 0) return true;
  }
  return false;
}

bool RowSpan::Add(std::vector<Rational> row) {
  if (row.size() != cols_) Fail(ErrorKind::kInvalidArgument, "row width mismatch");
  Reduce(row);
  std::size_t p = 0;
  while (p < cols_ && row[p] == 0) ++p;
  if (p == cols_) return false;
  const Rational inv = 1 / row[p];
  for (auto& v : row) v *= inv;
  basis_.push_back(std::move(row));
  pivots_.push_back(p);
  return true;
}

}  // namespace cutgap
