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

#ifndef CUTGAP_LINALG_HPP_
#define CUTGAP_LINALG_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "cutgap/rational.hpp"

namespace cutgap {

// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix FromRows(const std::vector<std::vector<Rational>>& rows,
                                 std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::vector<Rational> Row(std::size_t r) const;
  void AppendRow(const std::vector<Rational>& row);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Exact rank via fraction-free (Bareiss) elimination on an integer-scaled copy.
std::size_t Rank(const RationalMatrix& m);

struct LinearSolveResult {
  enum class Kind { kUnique, kNotUnique, kInconsistent };
  Kind kind = Kind::kInconsistent;
  std::vector<Rational> solution;  // set only for kUnique
};

// Solves a x = b. Distinguishes a unique solution from an underdetermined
// consistent system and from an inconsistent one. Throws on dimension mismatch.
LinearSolveResult SolveUnique(const RationalMatrix& a, const std::vector<Rational>& b);

// A nonzero vector d with a d = 0, or nullopt when the columns are independent.
std::optional<std::vector<Rational>> NullspaceVector(const RationalMatrix& a);

std::vector<Rational> Multiply(const RationalMatrix& a, const std::vector<Rational>& x);

// Incrementally maintained row echelon basis; Add reports whether the row was
// independent of the rows already accepted.
class RowSpan {
 public:
  explicit RowSpan(std::size_t cols) : cols_(cols) {}

  bool Add(std::vector<Rational> row);
  bool IsIndependent(std::vector<Rational> row) const;
  std::size_t rank() const { return basis_.size(); }

 private:
  void Reduce(std::vector<Rational>& row) const;

  std::size_t cols_;
  std::vector<std::vector<Rational>> basis_;  // each row normalized to pivot 1
  std::vector<std::size_t> pivots_;
};

}  // namespace cutgap

#endif  // CUTGAP_LINALG_HPP_
