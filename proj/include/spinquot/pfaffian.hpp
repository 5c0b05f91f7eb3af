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

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "spinquot/linalg.hpp"
#include "spinquot/polynomial.hpp"
#include "spinquot/random.hpp"
#include "spinquot/rational.hpp"
#include "spinquot/weyl.hpp"

namespace spinquot {

/// Sorted set of distinct indices in [1..size].
using IndexSet = std::vector<int>;

/// Exact skew-symmetric matrix, addressed 1-based.
class SkewMatrix {
 public:
  explicit SkewMatrix(int size);
  /// Throws std::invalid_argument unless `m` is square with zero diagonal
  /// and a_ij = −a_ji.
  explicit SkewMatrix(const RationalMatrix& m);

  [[nodiscard]] int size() const noexcept { return size_; }
  [[nodiscard]] const Rational& entry(int i, int j) const {
    return a_[static_cast<std::size_t>((i - 1) * size_ + (j - 1))];
  }
  /// Sets a_ij and a_ji = −value; i ≠ j.
  void set(int i, int j, const Rational& value);

  [[nodiscard]] RationalMatrix dense() const;
  /// Principal submatrix on the rows and columns in `indices`.
  [[nodiscard]] SkewMatrix principal(const IndexSet& indices) const;

  bool operator==(const SkewMatrix&) const = default;

 private:
  int size_;
  std::vector<Rational> a_;
};

/// Pfaffian with the matching sign: Pf = Σ sgn(π) Π a_{π(2i−1)π(2i)} over
/// perfect matchings written with π(2i−1) < π(2i). Odd size gives 0.
Rational pfaffian(const SkewMatrix& a);

/// P(I) = Pf(A(I)); P(∅) = 1 and P(I) = 0 for odd |I|.
Rational sub_pfaffian(const SkewMatrix& a, const IndexSet& indices);

/// Memoized P(I) for every I ⊆ [1..size] of one matrix; I is a bitmask with
/// bit i−1 for index i.
class PfaffianTable {
 public:
  explicit PfaffianTable(SkewMatrix a);

  const Rational& operator()(std::uint32_t mask);
  Rational operator()(const IndexSet& indices);

  [[nodiscard]] const SkewMatrix& matrix() const noexcept { return a_; }

 private:
  SkewMatrix a_;
  std::unordered_map<std::uint32_t, Rational> memo_;
};

struct DualPair {
  IndexSet a;
  IndexSet b;
};

/// ī(A) = mirrors of the entries above 4n+2; ī(B) = complement of the entries
/// ≤ 4n+2. Both sorted.
DualPair dual_pair(const CosetTuple& row, const RankParam& p);

/// q_ī(A) = P(ī(B)); requires ī(A) = ī(B).
Rational q(const CosetTuple& row, const SkewMatrix& a);
Rational q(const CosetTuple& row, PfaffianTable& table);

/// The tuple ī with q_ī = P(I).
CosetTuple remark25_tuple(const IndexSet& indices, const RankParam& p);

/// Σ_τ (−1)^τ P(I1 Δ {i_τ}) P(I2 Δ {i_τ}) over I1 Δ I2 = {i_1 < … < i_t};
/// requires |I1|, |I2| odd.
Rational exchange_residual(const SkewMatrix& a, const IndexSet& i1, const IndexSet& i2);
Rational exchange_residual(PfaffianTable& table, const IndexSet& i1, const IndexSet& i2);

struct ExchangeFailure {
  std::size_t matrix;
  IndexSet i1;
  IndexSet i2;
  Rational residual;
};

struct Thm23Report {
  int n = 0;
  std::uint64_t seed = 0;
  std::size_t matrices = 0;
  std::size_t checks = 0;
  std::vector<ExchangeFailure> failures;
  [[nodiscard]] bool pass() const { return checks > 0 && failures.empty(); }
};

/// Exchange-identity sweep. For n = 1 every pair of odd subsets of [1..6] on
/// `matrices` random matrices; for n ≥ 2, `triples` random (I1, I2, A).
Thm23Report verify_thm23(const RankParam& p, std::uint64_t seed, std::size_t matrices = 5,
                         std::size_t triples = 500);

/// a_ij = 1 for j − i = 2n+1, 0 otherwise (and skew below the diagonal).
SkewMatrix reference_matrix(const RankParam& p);

/// Skew matrix with integer entries above the diagonal drawn from [−bound, bound].
SkewMatrix random_skew(int size, SeededRng& rng, std::int64_t bound = 1'000'000);

/// Index of the generic entry x_ij (i < j) among the size·(size−1)/2 variables,
/// ordered x_12, x_13, …, x_{size−1,size}.
std::size_t skew_variable(int size, int i, int j);

/// P(I) of the generic skew matrix as a polynomial in the x_ij.
SparsePolynomial symbolic_sub_pfaffian(int size, const IndexSet& indices);

}  // namespace spinquot
