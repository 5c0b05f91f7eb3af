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
#include <optional>
#include <string>
#include <vector>

#include "spinquot/pfaffian.hpp"
#include "spinquot/straighten.hpp"
#include "spinquot/tableau.hpp"

namespace spinquot {

/// dim R_k(X(v)) for the 2λ grading: the number of spin-standard T-invariant
/// tableaux with 2k rows, all ≤ v.
std::uint64_t dim_rk(const RankParam& p, const CosetTuple& v, int k, const Limits& limits = {});

/// Hilbert function of the 4λ-graded ring: dims[k] = dim R_{2k}.
struct GradedDims {
  CosetTuple v;
  std::vector<std::uint64_t> dims;
};

GradedDims graded_dims(const RankParam& p, const CosetTuple& v, int kmax, const Limits& limits = {});

enum class Prop11Case { I = 1, II, III, IV, V };

/// "i".."v" (case-insensitive); throws std::invalid_argument otherwise.
Prop11Case parse_prop11_case(const std::string& text);
std::string to_string(Prop11Case c);

/// The closed form claimed for dim R_{2k}: 1, 2k+1, 2k+1, C(2k+3,3), C(2k+2,2).
std::uint64_t prop11_expected(Prop11Case c, int k);

struct Prop11Row {
  int k;
  std::uint64_t dim;
  std::uint64_t expected;
};

struct Prop11Report {
  Prop11Case which = Prop11Case::I;
  int n = 0;
  CosetTuple v;
  std::vector<Prop11Row> rows;
  bool pass = false;
  std::optional<int> first_failure;
};

/// Compares dim R_{2k}(X(v_{case+0})) with the Veronese value for k ≤ kmax;
/// case i uses v1, ii uses v2, …, v uses v5.
Prop11Report verify_prop11(Prop11Case which, const RankParam& p, int kmax, const Limits& limits = {});

struct FactorizationWitness {
  Tableau tableau;
  std::vector<Generator> blocks;
};

/// Partition of the rows of `t` into generator row-multisets, if one exists.
std::optional<std::vector<Generator>> factor_into_generators(const Tableau& t);

struct Lemma51Report {
  int n = 0;
  int kmax = 0;
  bool pass = false;
  /// Tableaux checked per 2λ degree 1..2·kmax.
  std::vector<std::uint64_t> checked;
  std::vector<FactorizationWitness> witnesses;
  std::vector<Tableau> failures;
};

/// Every invariant standard tableau on X(v6) of 2λ degree 1..2·kmax splits
/// into generator blocks; each witness is re-validated.
Lemma51Report verify_lemma51(const RankParam& p, int kmax, const Limits& limits = {},
                             bool keep_witnesses = true);

struct Thm51Row {
  int k;
  std::uint64_t dim;
  std::uint64_t rank;
  std::uint64_t products;
};

struct Thm51Report {
  int n = 0;
  int kmax = 0;
  bool pass = false;
  std::vector<Thm51Row> rows;
};

/// The degree-one elements of the 4λ grading used for generation:
/// X_iX_j (i ≤ j) and Y3, as 4-row tableaux.
std::vector<std::pair<std::string, Tableau>> degree_one_elements(const RankParam& p);

/// For k ≤ kmax, the products of k degree-one elements, straightened on
/// X(v6), span R_{2k}: their rank over the standard-monomial basis equals
/// its size.
Thm51Report verify_thm51(const RankParam& p, int kmax, const Limits& limits = {},
                         std::size_t max_steps = 1'000'000);

/// Π q_row(A) over the rows of t; the empty tableau evaluates to 1.
Rational evaluate_tableau(const Tableau& t, const SkewMatrix& a);

}  // namespace spinquot
