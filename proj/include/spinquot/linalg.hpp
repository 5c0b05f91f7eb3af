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

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "spinquot/rational.hpp"

namespace spinquot {

/// Dense row-major matrix of exact rationals.
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rank by exact Gaussian elimination (the input is copied).
std::size_t rank(RationalMatrix matrix);

/// Reduces `matrix` in place to reduced row echelon form and returns the
/// pivot column of each nonzero row, in order.
std::vector<std::size_t> reduce_to_rref(RationalMatrix& matrix);

/// Solves the square system `coefficients * x = rhs`; nullopt if singular.
std::optional<std::vector<Rational>> solve(RationalMatrix coefficients,
                                           std::vector<Rational> rhs);

/// Row space built one vector at a time, kept in reduced echelon form.
///
/// Used where only the rank of a long stream of vectors matters: insertion
/// stops contributing once the span is full.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dimension) : dimension_(dimension) {}

  /// Adds `vector` to the span; returns true if the rank increased.
  bool insert(std::vector<Rational> vector);

  [[nodiscard]] std::size_t rank() const noexcept { return rows_.size(); }
  [[nodiscard]] std::size_t dimension() const noexcept { return dimension_; }
  [[nodiscard]] bool full() const noexcept { return rows_.size() == dimension_; }

 private:
  std::size_t dimension_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace spinquot
