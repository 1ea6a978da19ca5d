/*
 * Copyright 2026 The Schwarzmap Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "schwarzmap/rational.hpp"

namespace schwarzmap {

struct LinearSystem {
  std::vector<std::vector<Rational>> matrix;  // rows x cols
  std::vector<Rational> rhs;                  // one entry per row
};

enum class SolveStatus { kUnique, kInconsistent, kUnderdetermined };

struct SolveResult {
  SolveStatus status;
  std::vector<Rational> solution;  // populated only for kUnique
};

// Exact Gaussian elimination over Q. Inconsistency wins over rank
// deficiency: a system that is both contradictory and rank-deficient
// reports kInconsistent.
inline SolveResult solve_exact(LinearSystem sys) {
  const std::size_t rows = sys.matrix.size();
  if (sys.rhs.size() != rows) {
    throw std::invalid_argument("solve_exact: rhs length does not match row count");
  }
  const std::size_t cols = rows == 0 ? 0 : sys.matrix.front().size();
  for (const auto& row : sys.matrix) {
    if (row.size() != cols) {
      throw std::invalid_argument("solve_exact: ragged matrix");
    }
  }

  std::vector<std::size_t> pivot_row_of_col(cols, rows);
  std::size_t pivot_rows = 0;
  for (std::size_t col = 0; col < cols && pivot_rows < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t r = pivot_rows; r < rows; ++r) {
      if (sys.matrix[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows) continue;
    std::swap(sys.matrix[pivot], sys.matrix[pivot_rows]);
    std::swap(sys.rhs[pivot], sys.rhs[pivot_rows]);
    const Rational inv = Rational(1) / sys.matrix[pivot_rows][col];
    for (std::size_t c = col; c < cols; ++c) sys.matrix[pivot_rows][c] *= inv;
    sys.rhs[pivot_rows] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_rows) continue;
      const Rational factor = sys.matrix[r][col];
      if (factor == 0) continue;
      for (std::size_t c = col; c < cols; ++c) {
        sys.matrix[r][c] -= factor * sys.matrix[pivot_rows][c];
      }
      sys.rhs[r] -= factor * sys.rhs[pivot_rows];
    }
    pivot_row_of_col[col] = pivot_rows;
    ++pivot_rows;
  }

  for (std::size_t r = pivot_rows; r < rows; ++r) {
    if (sys.rhs[r] != 0) return {SolveStatus::kInconsistent, {}};
  }
  if (pivot_rows < cols) return {SolveStatus::kUnderdetermined, {}};

  std::vector<Rational> solution(cols, Rational(0));
  for (std::size_t col = 0; col < cols; ++col) {
    solution[col] = sys.rhs[pivot_row_of_col[col]];
  }
  return {SolveStatus::kUnique, std::move(solution)};
}

}  // namespace schwarzmap
