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
#include <string>
#include <vector>

#include "spinquot/rational.hpp"

namespace spinquot {

/// Exponent vector of a commutative monomial; entry i is the power of variable i.
using Exponents = std::vector<std::uint16_t>;

/// Sparse multivariate polynomial with exact rational coefficients over a fixed
/// number of variables. Zero coefficients are never stored.
class SparsePolynomial {
 public:
  explicit SparsePolynomial(std::size_t variables = 0) : variables_(variables) {}

  static SparsePolynomial constant(std::size_t variables, const Rational& c);
  static SparsePolynomial variable(std::size_t variables, std::size_t index);
  static SparsePolynomial monomial(Exponents exponents, const Rational& c = 1);

  [[nodiscard]] std::size_t variables() const noexcept { return variables_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
  [[nodiscard]] const std::map<Exponents, Rational>& terms() const noexcept {
    return terms_;
  }

  void add_term(const Exponents& exponents, const Rational& c);

  SparsePolynomial& operator+=(const SparsePolynomial& other);
  SparsePolynomial& operator-=(const SparsePolynomial& other);
  SparsePolynomial& operator*=(const Rational& c);

  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) {
    return a += b;
  }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) {
    return a -= b;
  }
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
  friend SparsePolynomial operator*(SparsePolynomial a, const Rational& c) { return a *= c; }
  SparsePolynomial operator-() const;

  bool operator==(const SparsePolynomial& other) const {
    return variables_ == other.variables_ && terms_ == other.terms_;
  }

  /// Value at `point` (one entry per variable).
  [[nodiscard]] Rational evaluate(const std::vector<Rational>& point) const;

  /// Human-readable form using `names` for the variables (x0, x1, ... if empty).
  [[nodiscard]] std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void check_compatible(const SparsePolynomial& other) const;

  std::size_t variables_;
  std::map<Exponents, Rational> terms_;
};

}  // namespace spinquot
