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

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinquot/rational.hpp"

namespace spinquot {

/// Raised when a request exceeds a configured enumeration limit.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rank parameter of SO(8n+4): rank 4n+2 acting on an ambient space of
/// dimension 8n+4.
class RankParam {
 public:
  explicit RankParam(int n);

  [[nodiscard]] int n() const noexcept { return n_; }
  /// 4n+2: the rank, also the length of a coset tuple.
  [[nodiscard]] int rank() const noexcept { return 4 * n_ + 2; }
  /// 8n+4: size of the one-line notation.
  [[nodiscard]] int ambient() const noexcept { return 8 * n_ + 4; }
  /// The partner t ↦ 8n+5−t.
  [[nodiscard]] int mirror(int t) const noexcept { return ambient() + 1 - t; }

  bool operator==(const RankParam&) const = default;

 private:
  int n_;
};

/// Strictly increasing tuple of positive integers; indexes W^Q / W^P and
/// tableau rows. Ordered lexicographically (not Bruhat) for containers.
class CosetTuple {
 public:
  CosetTuple() = default;
  explicit CosetTuple(std::vector<int> entries);
  CosetTuple(std::initializer_list<int> entries)
      : CosetTuple(std::vector<int>(entries)) {}

  [[nodiscard]] std::span<const int> entries() const noexcept { return entries_; }
  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  [[nodiscard]] auto begin() const noexcept { return entries_.begin(); }
  [[nodiscard]] auto end() const noexcept { return entries_.end(); }
  [[nodiscard]] bool contains(int value) const;

  /// Length 4n+2, entries in [1..8n+4], mirror-free, even number of entries
  /// above 4n+2.
  [[nodiscard]] bool is_wp_member(const RankParam& p) const;

  /// Number of entries above 4n+2.
  [[nodiscard]] int big_count(const RankParam& p) const;

  [[nodiscard]] std::string to_string() const;

  auto operator<=>(const CosetTuple&) const = default;

 private:
  std::vector<int> entries_;
};

/// Element of the type-D Weyl group in one-line notation on [1..8n+4].
class WeylElement {
 public:
  /// Validates permutation, mirror symmetry and even m_w.
  WeylElement(const RankParam& p, std::vector<int> one_line);

  static WeylElement identity(const RankParam& p);

  [[nodiscard]] const RankParam& rank_param() const noexcept { return p_; }
  [[nodiscard]] std::span<const int> one_line() const noexcept { return a_; }
  /// a_j for 1 ≤ j ≤ 8n+4.
  [[nodiscard]] int operator()(int j) const { return a_.at(static_cast<std::size_t>(j - 1)); }
  /// #{ i ≤ 4n+2 : a_i > 4n+2 }.
  [[nodiscard]] int m_w() const;

  bool operator==(const WeylElement& other) const { return a_ == other.a_; }

 private:
  RankParam p_;
  std::vector<int> a_;
};

/// Vector in the ε-basis of X(T), length 4n+2.
struct Weight {
  std::vector<Rational> coords;
  bool operator==(const Weight&) const = default;
};

WeylElement simple_reflection(int i, const RankParam& p);

/// Composition (w1·w2)(j) = w1(w2(j)).
WeylElement multiply(const WeylElement& w1, const WeylElement& w2);

/// s_{word[0]} · s_{word[1]} · … · s_{word[last]}.
WeylElement word_to_element(std::span<const int> word, const RankParam& p);

/// Sorted first half of the one-line notation: the minimal representative
/// of wW_P.
CosetTuple coset_rep(const WeylElement& w);

/// Componentwise order on equal-length tuples.
bool bruhat_leq(const CosetTuple& x, const CosetTuple& y);

/// ε_j ↦ ε_{a_j}, where ε_m for m > 4n+2 means −ε_{8n+5−m}.
Weight act_on_weight(const WeylElement& w, const Weight& mu);

/// Same action, evaluated on a coset representative (the first half of the
/// one-line notation in any order).
Weight act_on_weight(const CosetTuple& w, const Weight& mu, const RankParam& p);

Weight simple_root(int i, const RankParam& p);

/// ϖ_{4n+2} = ½(ε_1 + … + ε_{4n+2}).
Weight spin_weight(const RankParam& p);

/// Coefficients c with mu = Σ c_i α_i, solved exactly.
std::vector<Rational> simple_root_coordinates(const Weight& mu, const RankParam& p);

/// True iff every simple-root coordinate of mu is ≤ 0.
bool is_nonpositive_combination(const Weight& mu, const RankParam& p);

/// Enumeration limits shared by the exhaustive routines.
struct Limits {
  int max_n = 4;
  int max_degree = 12;

  static Limits unlimited() { return {1 << 20, 1 << 20}; }
};

/// All W^P tuples, lexicographically sorted; 2^{4n+1} of them.
std::vector<CosetTuple> enumerate_wp(const RankParam& p, const Limits& limits = {});

/// The unique Bruhat-minimal w ∈ W^P with w(ϖ) ≤ 0. Throws std::logic_error
/// if the minimum is not unique.
CosetTuple minimal_semistable(const RankParam& p, const Limits& limits = {});

/// τ_{2i−1} as a reduced word.
std::vector<int> tau_word(int i, const RankParam& p);

/// Word for v_index (1..6): v₁ = s_{4n+2} τ_{4n−1} ⋯ τ_1 and the five
/// covers above it.
std::vector<int> schubert_word(int index, const RankParam& p);

/// coset_rep(word_to_element(schubert_word(index, p))).
CosetTuple schubert_point(int index, const RankParam& p);

}  // namespace spinquot
