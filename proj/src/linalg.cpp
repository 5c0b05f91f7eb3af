/*
 * Copyright 2026 The spinquot Authors
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

#include "spinquot/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace spinquot {

std::vector<std::size_t> reduce_to_rref(RationalMatrix& matrix) {
  std::vector<std::size_t> pivots;
  if (matrix.empty()) return pivots;
  const std::size_t cols = matrix.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < matrix.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < matrix.size() && sgn(matrix[pivot][col]) == 0) ++pivot;
    if (pivot == matrix.size()) continue;
    std::swap(matrix[row], matrix[pivot]);
    const Rational inv = 1 / matrix[row][col];
    for (std::size_t c = col; c < cols; ++c) matrix[row][c] *= inv;
    for (std::size_t r = 0; r < matrix.size(); ++r) {
      if (r == row || sgn(matrix[r][col]) == 0) continue;
      const Rational factor = matrix[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        matrix[r][c] -= factor * matrix[row][c];
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(RationalMatrix matrix) { return reduce_to_rref(matrix).size(); }

std::optional<std::vector<Rational>> solve(RationalMatrix coefficients,
                                           std::vector<Rational> rhs) {
  const std::size_t n = coefficients.size();
  if (rhs.size() != n) throw std::invalid_argument("solve: size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (coefficients[i].size() != n) {
      throw std::invalid_argument("solve: matrix is not square");
    }
    coefficients[i].push_back(rhs[i]);
  }
  const auto pivots = reduce_to_rref(coefficients);
  if (pivots.size() < n || (n > 0 && pivots.back() >= n)) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = coefficients[i][n];
  return x;
}

bool EchelonBasis::insert(std::vector<Rational> vector) {
  if (vector.size() != dimension_) {
    throw std::invalid_argument("EchelonBasis: dimension mismatch");
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (sgn(vector[p]) == 0) continue;
    const Rational factor = vector[p];
    for (std::size_t c = p; c < dimension_; ++c) vector[c] -= factor * rows_[i][c];
  }
  std::size_t p = 0;
  while (p < dimension_ && sgn(vector[p]) == 0) ++p;
  if (p == dimension_) return false;
  const Rational inv = 1 / vector[p];
  for (std::size_t c = p; c < dimension_; ++c) vector[c] *= inv;
  for (auto& row : rows_) {
    if (sgn(row[p]) == 0) continue;
    const Rational factor = row[p];
    for (std::size_t c = p; c < dimension_; ++c) row[c] -= factor * vector[c];
  }
  rows_.push_back(std::move(vector));
  pivots_.push_back(p);
  return true;
}

}  // namespace spinquot
