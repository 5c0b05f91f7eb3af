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
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinquot/rational.hpp"

namespace spinquot::rewrite {

/// Exponent vector over the variables of a system, in system order.
using Monomial = std::vector<int>;

/// Linear combination of monomials.
using Polynomial = std::map<Monomial, Rational>;

int degree(const Monomial& m);
bool divides(const Monomial& a, const Monomial& b);

/// Raised when a rule set fails its load-time checks or a reduction does not
/// terminate within its step cap.
class RewriteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Rule {
  Monomial lhs;
  Monomial rhs;
};

/// Degree-2 monomial rewriting system. The term order is degree-lexicographic
/// with earlier variables larger; every rule must strictly decrease it.
class ReductionSystem {
 public:
  ReductionSystem() = default;
  /// Validates, orients-checks and inter-reduces the rules: a rule whose rhs is
  /// reducible has its rhs replaced by its normal form, and a rule whose lhs
  /// is divisible by another lhs is dropped.
  ReductionSystem(std::vector<std::string> variables, std::vector<Rule> rules);

  [[nodiscard]] const std::vector<std::string>& variables() const noexcept { return variables_; }
  [[nodiscard]] const std::vector<Rule>& rules() const noexcept { return rules_; }
  [[nodiscard]] std::size_t variable_count() const noexcept { return variables_.size(); }

  /// Index of `name`; throws RewriteError if unknown.
  [[nodiscard]] std::size_t variable_index(const std::string& name) const;
  /// Parses "z1 z2", "z1*z2" or "z4^2" into a monomial.
  [[nodiscard]] Monomial parse_monomial(const std::string& text) const;
  /// "z4^2*z5"; the empty monomial prints as "1".
  [[nodiscard]] std::string to_string(const Monomial& m) const;

  /// First rule (in rule order) whose lhs divides m.
  [[nodiscard]] std::optional<std::size_t> first_applicable(const Monomial& m) const;
  /// (m / lhs) · rhs for rule `index`; lhs must divide m.
  [[nodiscard]] Monomial apply(const Monomial& m, std::size_t index) const;

 private:
  std::vector<std::string> variables_;
  std::vector<Rule> rules_;
};

/// True iff a > b in the degree-lexicographic order with earlier variables
/// larger.
bool order_greater(const Monomial& a, const Monomial& b);

/// Applies the first applicable rule until none applies.
Monomial normal_form(const Monomial& m, const ReductionSystem& s, std::size_t max_steps = 100'000);

/// Termwise normal form, collecting coefficients; zero terms are removed.
Polynomial normal_form(const Polynomial& f, const ReductionSystem& s, std::size_t max_steps = 100'000);

/// Every irreducible monomial reachable from m by some sequence of rule
/// applications, sorted.
std::vector<Monomial> all_normal_forms(const Monomial& m, const ReductionSystem& s);

/// Degree-3 ambiguities: lcms of pairs of distinct lhs's of total degree 3,
/// together with the self-overlaps lhs·x for each variable x dividing lhs.
/// Deduplicated and sorted in decreasing term order.
std::vector<Monomial> overlaps(const ReductionSystem& s);

struct Branch {
  std::size_t rule;
  Monomial after_first_step;
  std::vector<Monomial> normal_forms;
};

struct AmbiguityResult {
  Monomial monomial;
  std::vector<Branch> branches;
  bool resolved = false;
  Monomial normal_form;
};

struct DiamondReport {
  bool confluent = false;
  std::vector<AmbiguityResult> ambiguities;
  /// Two distinct normal forms of the first unresolved ambiguity.
  std::optional<std::pair<Monomial, Monomial>> divergence;
};

/// Resolves every ambiguity along each first rule and all subsequent paths.
DiamondReport check_diamond(const ReductionSystem& s);

/// Resolves a single monomial the same way check_diamond does.
AmbiguityResult resolve(const Monomial& m, const ReductionSystem& s);

/// Number of degree-k monomials not divisible by any lhs. Throws RewriteError
/// if the system is not confluent.
std::uint64_t hilbert_count(const ReductionSystem& s, int k);

/// C(d + 2k, d).
std::uint64_t veronese_dim(int d, int k);

/// Symmetric (d+1)×(d+1) matrix of variable names.
class SymMinorIdeal {
 public:
  explicit SymMinorIdeal(std::vector<std::vector<std::string>> matrix);

  [[nodiscard]] int d() const noexcept { return static_cast<int>(matrix_.size()) - 1; }
  [[nodiscard]] const std::vector<std::vector<std::string>>& matrix() const noexcept { return matrix_; }
  /// All 2×2 minors (rows i<j, columns k<l) as polynomials over s's variables,
  /// skipping the identically zero ones.
  [[nodiscard]] std::vector<Polynomial> minors(const ReductionSystem& s) const;

 private:
  std::vector<std::vector<std::string>> matrix_;
};

struct VeroneseReport {
  bool rules_are_minors = false;     // I ⊆ J
  bool minors_reduce_to_zero = false;  // J ⊆ I
  bool hilbert_agrees = false;
  std::vector<std::size_t> rules_not_minors;
  std::vector<std::size_t> minors_not_reduced;
  /// (k, hilbert_count, veronese_dim) for k = 0..kmax.
  std::vector<std::tuple<int, std::uint64_t, std::uint64_t>> hilbert;
  [[nodiscard]] bool pass() const { return rules_are_minors && minors_reduce_to_zero && hilbert_agrees; }
};

VeroneseReport verify_veronese_equality(const ReductionSystem& s, const SymMinorIdeal& m, int kmax);

enum class Builtin { P1, P2, P3 };

/// "P1", "P2", "P3" (case-insensitive).
Builtin parse_builtin(const std::string& text);
std::string to_string(Builtin b);

ReductionSystem builtin_system(Builtin b);
SymMinorIdeal builtin_matrix(Builtin b);

/// The ambiguities singled out in the published confluence argument.
std::vector<Monomial> listed_ambiguities(Builtin b);

/// Parses the text format: '#' comments, an optional "variables: a b c" line
/// fixing the order (earlier is larger), then one "LHS -> RHS" rule per line.
/// Without a variables line the order is natural order of the names.
ReductionSystem parse_system(const std::string& text);

}  // namespace spinquot::rewrite
