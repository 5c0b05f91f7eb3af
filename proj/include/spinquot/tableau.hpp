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
#include <string>
#include <vector>

#include "spinquot/weyl.hpp"

namespace spinquot {

/// Entries ≤ 4n+2 of a Spin row; the rest of the row is forced.
using CompressedRow = std::vector<int>;

/// Full row from its small part: small ∪ mirrors of the complement.
CosetTuple expand(const CompressedRow& small, const RankParam& p);

/// Inverse of expand on W^P rows.
CompressedRow compress(const CosetTuple& row, const RankParam& p);

/// Bitmask of the small part of a W^P row, bit t−1 for entry t.
std::uint32_t small_mask(const CosetTuple& row, const RankParam& p);
CosetTuple row_from_mask(std::uint32_t mask, const RankParam& p);

/// A list of rows read top to bottom. A tableau of shape 2kλ has 2k rows;
/// products of q-coordinates may have any number of rows.
class Tableau {
 public:
  Tableau(const RankParam& p, std::vector<CosetTuple> rows);

  static Tableau from_compressed(const RankParam& p, const std::vector<CompressedRow>& rows);

  [[nodiscard]] const RankParam& rank_param() const noexcept { return p_; }
  [[nodiscard]] const std::vector<CosetTuple>& rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t row_count() const noexcept { return rows_.size(); }
  /// k for a shape-2kλ tableau (rows / 2).
  [[nodiscard]] int degree() const noexcept { return static_cast<int>(rows_.size() / 2); }

  /// Concatenation; rows are re-sorted so a product of standard tableaux whose
  /// rows form a chain is again standard.
  [[nodiscard]] Tableau operator*(const Tableau& other) const;

  bool operator==(const Tableau& other) const { return rows_ == other.rows_; }
  auto operator<=>(const Tableau& other) const { return rows_ <=> other.rows_; }

  [[nodiscard]] std::string to_string() const;

 private:
  RankParam p_;
  std::vector<CosetTuple> rows_;
};

/// Every row is a W^P row and the columns are weakly increasing.
bool is_spin_standard(const Tableau& t);

/// Number of occurrences of `value` in the tableau.
int content(const Tableau& t, int value);

/// c(t) = c(8n+5−t) for all t.
bool is_t_invariant(const Tableau& t);

/// Every row ≤ v componentwise.
bool rows_bounded(const Tableau& t, const CosetTuple& v);

/// The W^P rows below a fixed v, with the chain structure needed to count
/// standard tableaux.
class RowSpace {
 public:
  RowSpace(const RankParam& p, const CosetTuple& v, const Limits& limits = {});

  [[nodiscard]] const RankParam& rank_param() const noexcept { return p_; }
  [[nodiscard]] const CosetTuple& bound() const noexcept { return v_; }
  /// Rows ≤ v in lexicographic order.
  [[nodiscard]] const std::vector<CosetTuple>& rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t size() const noexcept { return rows_.size(); }
  [[nodiscard]] std::uint32_t mask(std::size_t i) const { return masks_[i]; }
  /// Indices j with rows()[i] ≤ rows()[j], ascending (includes i).
  [[nodiscard]] const std::vector<std::uint32_t>& above(std::size_t i) const { return above_[i]; }
  /// Bits set in every row above i, resp. in some row above i.
  [[nodiscard]] std::uint32_t forced_in(std::size_t i) const { return forced_in_[i]; }
  [[nodiscard]] std::uint32_t possible_in(std::size_t i) const { return possible_in_[i]; }
  /// f(m) = #{entries ≤ m} of row i, indexed by m−1.
  [[nodiscard]] const std::vector<std::uint8_t>& prefix(std::size_t i) const { return prefix_[i]; }
  [[nodiscard]] const std::vector<std::uint8_t>& bound_prefix() const { return bound_prefix_; }

 private:
  RankParam p_;
  CosetTuple v_;
  std::vector<CosetTuple> rows_;
  std::vector<std::uint32_t> masks_;
  std::vector<std::vector<std::uint32_t>> above_;
  std::vector<std::uint32_t> forced_in_;
  std::vector<std::uint32_t> possible_in_;
  std::vector<std::vector<std::uint8_t>> prefix_;
  std::vector<std::uint8_t> bound_prefix_;
};

/// Number of spin-standard T-invariant tableaux of shape 2kλ with rows ≤ v.
std::uint64_t count_invariant(const RowSpace& space, int k, const Limits& limits = {});

/// The same tableaux, in lexicographic order of their concatenated rows.
std::vector<Tableau> enumerate_invariant(const RowSpace& space, int k, const Limits& limits = {});

std::vector<Tableau> enumerate_invariant(const RankParam& p, int k, const CosetTuple& v,
                                         const Limits& limits = {});

}  // namespace spinquot
