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
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spinquot/pfaffian.hpp"
#include "spinquot/tableau.hpp"
#include "spinquot/weyl.hpp"

namespace spinquot {

/// Raised when straightening cannot proceed: a missing pivot, a broken
/// ordering property, or the step cap.
class StraighteningError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using RowId = std::uint32_t;

/// All W^P rows of one rank, numbered along a linear extension of the Bruhat
/// order (entry sum, then lexicographic).
class RowTable {
 public:
  explicit RowTable(const RankParam& p, const Limits& limits = {});

  [[nodiscard]] const RankParam& rank_param() const noexcept { return p_; }
  [[nodiscard]] std::size_t size() const noexcept { return rows_.size(); }
  [[nodiscard]] const CosetTuple& row(RowId id) const { return rows_.at(id); }
  /// Bitmask of ī(B), the index set whose sub-Pfaffian is q of the row.
  [[nodiscard]] std::uint32_t b_mask(RowId id) const { return b_masks_.at(id); }
  [[nodiscard]] RowId id(const CosetTuple& row) const;
  [[nodiscard]] RowId id_of_b_mask(std::uint32_t mask) const;
  [[nodiscard]] bool leq(RowId a, RowId b) const;

 private:
  RankParam p_;
  std::vector<CosetTuple> rows_;
  std::vector<std::uint32_t> b_masks_;
  std::vector<RowId> by_b_mask_;
};

/// Sorted multiset of rows, read as the product of their q-coordinates.
using QMonomial = std::vector<RowId>;

/// Formal rational combination of products of q-coordinates.
class QPolynomial {
 public:
  explicit QPolynomial(std::shared_ptr<const RowTable> table);

  static QPolynomial monomial(std::shared_ptr<const RowTable> table, QMonomial rows,
                              const Rational& c = 1);
  static QPolynomial from_tableau(std::shared_ptr<const RowTable> table, const Tableau& t,
                                  const Rational& c = 1);

  [[nodiscard]] const RowTable& table() const noexcept { return *table_; }
  [[nodiscard]] const std::shared_ptr<const RowTable>& table_ptr() const noexcept { return table_; }
  [[nodiscard]] const std::map<QMonomial, Rational>& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

  /// Adds c·(product of rows); the row list need not be sorted.
  void add(QMonomial rows, const Rational& c);

  QPolynomial& operator+=(const QPolynomial& other);
  QPolynomial& operator-=(const QPolynomial& other);
  QPolynomial& operator*=(const Rational& c);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  QPolynomial operator-() const;
  bool operator==(const QPolynomial& other) const { return terms_ == other.terms_; }

  /// Σ c Π q_row(A), using the memoized sub-Pfaffians of one matrix.
  [[nodiscard]] Rational evaluate(PfaffianTable& table) const;

  /// Terms as "+c (small)(small)…", rows in compressed notation.
  [[nodiscard]] std::string to_string() const;

 private:
  void check_compatible(const QPolynomial& other) const;

  std::shared_ptr<const RowTable> table_;
  std::map<QMonomial, Rational> terms_;
};

/// Rows pairwise comparable, i.e. the monomial is a standard tableau.
bool is_standard_monomial(const RowTable& table, const QMonomial& rows);

/// Compressed notation of one monomial, e.g. "(1,5)(2,3)".
std::string monomial_to_string(const RowTable& table, const QMonomial& rows);

struct NormalFormOptions {
  enum class Strategy { kFirstPair, kLastPair };
  /// Which incomparable pair of a monomial to straighten first.
  Strategy strategy = Strategy::kFirstPair;
  /// If set, monomials with a row ≰ bound are dropped as soon as they
  /// appear (q_r vanishes on X(bound) exactly when r ≰ bound).
  std::optional<CosetTuple> bound;
  /// Cap on straightening steps (one step rewrites one monomial).
  std::size_t max_steps = 10'000;
};

/// One term c·q_a·q_b of a straightening law, a ≤ b.
struct PairTerm {
  RowId a;
  RowId b;
  Rational coefficient;
};

/// Straightening of products of q-coordinates into standard monomials.
///
/// The law for an incomparable pair (x, y) is obtained by exact elimination
/// over every exchange relation in the weight space of q_x·q_y (the multiset
/// ī(B)_x ⊎ ī(B)_y is preserved by the exchange identity). Each law is
/// checked to satisfy the ordering property a < x, a < y for every term,
/// which makes normal_form terminate.
class Straightener {
 public:
  explicit Straightener(std::shared_ptr<const RowTable> table);

  [[nodiscard]] const std::shared_ptr<const RowTable>& table_ptr() const noexcept { return table_; }
  [[nodiscard]] const RowTable& table() const noexcept { return *table_; }

  /// Law for q_x·q_y; a standard pair maps to itself.
  const std::vector<PairTerm>& law(RowId x, RowId y);

  QPolynomial straighten_pair(RowId x, RowId y);
  QPolynomial straighten_pair(const CosetTuple& x, const CosetTuple& y);

  /// Rewrites until every monomial is standard.
  QPolynomial normal_form(const QPolynomial& p, const NormalFormOptions& options = {});

  /// Incomparable pairs (x < y by id) whose law was used by normal_form
  /// since the last clear_used_pairs().
  [[nodiscard]] const std::set<std::pair<RowId, RowId>>& used_pairs() const noexcept { return used_; }
  void clear_used_pairs() { used_.clear(); }

  /// Number of distinct weight spaces solved so far.
  [[nodiscard]] std::size_t solved_weights() const noexcept { return weights_.size(); }

 private:
  using WeightLaws = std::unordered_map<std::uint32_t, std::vector<PairTerm>>;
  const WeightLaws& solve_weight(std::uint32_t common, std::uint32_t diff);

  std::shared_ptr<const RowTable> table_;
  std::unordered_map<std::uint64_t, WeightLaws> weights_;
  std::map<std::pair<RowId, RowId>, std::vector<PairTerm>> standard_;
  std::set<std::pair<RowId, RowId>> used_;
};

/// Drops monomials with a row ≰ v; every monomial must be standard.
QPolynomial restrict_to_schubert(const QPolynomial& p, const CosetTuple& v);

/// Same, also reporting the dropped monomials.
QPolynomial restrict_to_schubert(const QPolynomial& p, const CosetTuple& v,
                                 std::vector<QMonomial>& dropped);

// ---------------------------------------------------------------------------
// Generators of the invariant ring on X(v6).

enum class Generator { X1, X2, X3, X4, X5, X6, Y1, Y2, Y3, Y4, Z1, Z2 };

std::vector<Generator> all_generators();
std::string generator_name(Generator g);
/// Throws std::invalid_argument for an unknown name.
Generator generator_from_name(std::string_view name);
Tableau generator(Generator g, const RankParam& p);

/// Compressed row built from the blocks O = (1,3,…,4n−3), E = (2,4,…,4n−4)
/// and letters a..e = 4n−2..4n+2, e.g. "Oade" or "Ebc".
CompressedRow block_row(std::string_view spec, const RankParam& p);

// ---------------------------------------------------------------------------
// Straightening laws displayed in the relation proofs.

struct DisplayedTerm {
  int sign;
  std::string first;
  std::string second;
};

struct DisplayedLaw {
  std::string label;
  std::string lhs_first;
  std::string lhs_second;
  /// Full law on G/P; empty when only the restricted form is displayed.
  std::vector<DisplayedTerm> full;
  /// Law on X(v6); empty when only the full form is displayed.
  std::vector<DisplayedTerm> restricted;
};

const std::vector<DisplayedLaw>& displayed_laws();

struct LawCheck {
  std::string label;
  bool full_ok = true;
  bool restricted_ok = true;
  std::string computed_full;
  std::string computed_restricted;
};

/// Compares straighten_pair with a displayed law, monomial by monomial.
LawCheck check_displayed_law(const DisplayedLaw& law, Straightener& s);

// ---------------------------------------------------------------------------
// Relation checks.

struct RelationReport {
  std::string lemma;
  int case_id = 0;
  int n = 0;
  bool pass = false;
  std::string relation;
  /// Restricted normal form of the relation; empty when it vanishes.
  std::string remainder;
  std::vector<std::string> dropped_monomials;
  /// Every dropped monomial contains a row ≰ v6.
  bool dropped_ok = true;
  /// Both pair-selection strategies give the same restricted result.
  bool path_independent = true;
  std::size_t residual_checks = 0;
  std::size_t residual_failures = 0;
  /// Number of pair laws certified as polynomial identities (n = 1 only).
  std::size_t symbolic_laws = 0;
  std::size_t symbolic_failures = 0;
  std::vector<LawCheck> displayed;
};

struct RelationOptions {
  std::uint64_t seed = 0;
  /// Random matrices for the functional residual checks.
  int random_matrices = 25;
  /// Certify pair laws symbolically when n = 1.
  bool symbolic = true;
  /// Step cap for the unrestricted normal form; products of three generators
  /// at n = 2 expand to ~10^5 standard monomials on G/P.
  std::size_t max_steps = 1'000'000;
};

/// Quadratic relation `case_id` (1..3): X2X3−X1X4+Y1−Y3, X4X5−X3X6+Y4−Y3,
/// X2X5−X1X6+Y2−Y3, straightened and restricted to X(v6).
RelationReport verify_lemma52(int case_id, const RankParam& p, const RelationOptions& options = {});

/// Cubic relation `case_id` (1..2): Z1−X2Y4 and Z2−X2Y3.
RelationReport verify_lemma53(int case_id, const RankParam& p, const RelationOptions& options = {});

}  // namespace spinquot
