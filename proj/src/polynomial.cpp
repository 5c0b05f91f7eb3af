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

#include "spinquot/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace spinquot {

SparsePolynomial SparsePolynomial::constant(std::size_t variables, const Rational& c) {
  SparsePolynomial p(variables);
  p.add_term(Exponents(variables, 0), c);
  return p;
}

SparsePolynomial SparsePolynomial::variable(std::size_t variables, std::size_t index) {
  if (index >= variables) throw std::out_of_range("SparsePolynomial: variable index");
  Exponents e(variables, 0);
  e[index] = 1;
  return monomial(std::move(e));
}

SparsePolynomial SparsePolynomial::monomial(Exponents exponents, const Rational& c) {
  SparsePolynomial p(exponents.size());
  p.add_term(exponents, c);
  return p;
}

void SparsePolynomial::add_term(const Exponents& exponents, const Rational& c) {
  if (exponents.size() != variables_) {
    throw std::invalid_argument("SparsePolynomial: exponent length mismatch");
  }
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void SparsePolynomial::check_compatible(const SparsePolynomial& other) const {
  if (variables_ != other.variables_) {
    throw std::invalid_argument("SparsePolynomial: variable count mismatch");
  }
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

SparsePolynomial SparsePolynomial::operator-() const {
  SparsePolynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
  a.check_compatible(b);
  SparsePolynomial out(a.variables_);
  Exponents e(a.variables_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

std::string SparsePolynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest exponent vectors first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    const Rational magnitude = abs(c);
    bool unit = magnitude == 1;
    bool any = false;
    if (!unit) os << format_rational(magnitude);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any || !unit) os << "*";
      os << (i < names.size() ? names[i] : "x" + std::to_string(i));
      if (e[i] > 1) os << "^" << e[i];
      any = true;
    }
    if (!any && unit) os << "1";
  }
  return os.str();
}

Rational SparsePolynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != variables_) throw std::invalid_argument("point has the wrong number of coordinates");
  Rational total = 0;
  for (const auto& [exps, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < exps.size(); ++i)
      for (std::uint16_t e = 0; e < exps[i]; ++e) term *= point[i];
    total += term;
  }
  return total;
}

}  // namespace spinquot
