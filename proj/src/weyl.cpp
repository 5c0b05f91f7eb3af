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

#include "spinquot/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "spinquot/linalg.hpp"

namespace spinquot {

RankParam::RankParam(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("rank parameter n must be >= 1");
}

CosetTuple::CosetTuple(std::vector<int> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 1) throw std::invalid_argument("tuple entries must be positive");
    if (i > 0 && entries_[i - 1] >= entries_[i])
      throw std::invalid_argument("tuple entries must be strictly increasing");
  }
}

bool CosetTuple::contains(int value) const {
  return std::binary_search(entries_.begin(), entries_.end(), value);
}

int CosetTuple::big_count(const RankParam& p) const {
  return static_cast<int>(
      std::count_if(entries_.begin(), entries_.end(), [&](int t) { return t > p.rank(); }));
}

bool CosetTuple::is_wp_member(const RankParam& p) const {
  if (static_cast<int>(entries_.size()) != p.rank()) return false;
  if (entries_.back() > p.ambient()) return false;
  for (int t : entries_)
    if (contains(p.mirror(t))) return false;
  return big_count(p) % 2 == 0;
}

std::string CosetTuple::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? "," : "") << entries_[i];
  os << ')';
  return os.str();
}

WeylElement::WeylElement(const RankParam& p, std::vector<int> one_line)
    : p_(p), a_(std::move(one_line)) {
  const int big_n = p.ambient();
  if (static_cast<int>(a_.size()) != big_n)
    throw std::invalid_argument("one-line notation must have length 8n+4");
  std::vector<bool> seen(static_cast<std::size_t>(big_n) + 1, false);
  for (int v : a_) {
    if (v < 1 || v > big_n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("one-line notation is not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
  for (int i = 1; i <= big_n; ++i)
    if ((*this)(i) != p.mirror((*this)(p.mirror(i))))
      throw std::invalid_argument("one-line notation violates mirror symmetry");
  if (m_w() % 2 != 0) throw std::invalid_argument("m_w must be even in type D");
}

WeylElement WeylElement::identity(const RankParam& p) {
  std::vector<int> a(static_cast<std::size_t>(p.ambient()));
  std::iota(a.begin(), a.end(), 1);
  return WeylElement(p, std::move(a));
}

int WeylElement::m_w() const {
  int m = 0;
  for (int i = 1; i <= p_.rank(); ++i)
    if ((*this)(i) > p_.rank()) ++m;
  return m;
}

WeylElement simple_reflection(int i, const RankParam& p) {
  const int ell = p.rank();
  if (i < 1 || i > ell) throw std::invalid_argument("simple reflection index out of range");
  std::vector<int> a(static_cast<std::size_t>(p.ambient()));
  std::iota(a.begin(), a.end(), 1);
  auto swap = [&](int x, int y) { std::swap(a[static_cast<std::size_t>(x - 1)], a[static_cast<std::size_t>(y - 1)]); };
  if (i < ell) {
    swap(i, i + 1);
    swap(p.mirror(i), p.mirror(i + 1));
  } else {
    swap(ell - 1, p.mirror(ell));
    swap(ell, p.mirror(ell - 1));
  }
  return WeylElement(p, std::move(a));
}

WeylElement multiply(const WeylElement& w1, const WeylElement& w2) {
  if (!(w1.rank_param() == w2.rank_param()))
    throw std::invalid_argument("cannot multiply Weyl elements of different rank");
  std::vector<int> a;
  a.reserve(w2.one_line().size());
  for (int j : w2.one_line()) a.push_back(w1(j));
  return WeylElement(w1.rank_param(), std::move(a));
}

WeylElement word_to_element(std::span<const int> word, const RankParam& p) {
  WeylElement w = WeylElement::identity(p);
  for (int i : word) w = multiply(w, simple_reflection(i, p));
  return w;
}

CosetTuple coset_rep(const WeylElement& w) {
  auto line = w.one_line();
  std::vector<int> head(line.begin(), line.begin() + w.rank_param().rank());
  std::sort(head.begin(), head.end());
  return CosetTuple(std::move(head));
}

bool bruhat_leq(const CosetTuple& x, const CosetTuple& y) {
  if (x.size() != y.size()) throw std::invalid_argument("bruhat_leq needs equal lengths");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

namespace {

void add_epsilon(Weight& out, int m, const Rational& c, const RankParam& p) {
  if (m <= p.rank())
    out.coords[static_cast<std::size_t>(m - 1)] += c;
  else
    out.coords[static_cast<std::size_t>(p.mirror(m) - 1)] -= c;
}

void check_weight(const Weight& mu, const RankParam& p) {
  if (static_cast<int>(mu.coords.size()) != p.rank())
    throw std::invalid_argument("weight must have 4n+2 coordinates");
}

}  // namespace

Weight act_on_weight(const WeylElement& w, const Weight& mu) {
  const RankParam& p = w.rank_param();
  check_weight(mu, p);
  Weight out{std::vector<Rational>(static_cast<std::size_t>(p.rank()))};
  for (int j = 1; j <= p.rank(); ++j) add_epsilon(out, w(j), mu.coords[static_cast<std::size_t>(j - 1)], p);
  return out;
}

Weight act_on_weight(const CosetTuple& w, const Weight& mu, const RankParam& p) {
  check_weight(mu, p);
  if (static_cast<int>(w.size()) != p.rank())
    throw std::invalid_argument("coset tuple must have 4n+2 entries");
  // Only meaningful for weights fixed by W_P; ϖ is the intended input.
  for (std::size_t j = 1; j < mu.coords.size(); ++j)
    if (mu.coords[j] != mu.coords[0])
      throw std::invalid_argument("tuple action requires a W_P-invariant weight");
  Weight out{std::vector<Rational>(static_cast<std::size_t>(p.rank()))};
  for (int m : w) add_epsilon(out, m, mu.coords[0], p);
  return out;
}

Weight simple_root(int i, const RankParam& p) {
  const int ell = p.rank();
  if (i < 1 || i > ell) throw std::invalid_argument("simple root index out of range");
  Weight a{std::vector<Rational>(static_cast<std::size_t>(ell))};
  if (i < ell) {
    a.coords[static_cast<std::size_t>(i - 1)] = 1;
    a.coords[static_cast<std::size_t>(i)] = -1;
  } else {
    a.coords[static_cast<std::size_t>(ell - 2)] = 1;
    a.coords[static_cast<std::size_t>(ell - 1)] = 1;
  }
  return a;
}

Weight spin_weight(const RankParam& p) {
  return Weight{std::vector<Rational>(static_cast<std::size_t>(p.rank()), Rational(1, 2))};
}

std::vector<Rational> simple_root_coordinates(const Weight& mu, const RankParam& p) {
  check_weight(mu, p);
  const auto ell = static_cast<std::size_t>(p.rank());
  RationalMatrix coeffs(ell, std::vector<Rational>(ell));
  for (std::size_t i = 0; i < ell; ++i) {
    Weight a = simple_root(static_cast<int>(i + 1), p);
    for (std::size_t r = 0; r < ell; ++r) coeffs[r][i] = a.coords[r];
  }
  auto c = solve(coeffs, mu.coords);
  if (!c) throw std::logic_error("simple roots do not span the weight space");
  return *c;
}

bool is_nonpositive_combination(const Weight& mu, const RankParam& p) {
  for (const Rational& c : simple_root_coordinates(mu, p))
    if (c > 0) return false;
  return true;
}

std::vector<CosetTuple> enumerate_wp(const RankParam& p, const Limits& limits) {
  if (p.n() > limits.max_n)
    throw GuardExceeded("W^P enumeration refused for n=" + std::to_string(p.n()) +
                        " (limit " + std::to_string(limits.max_n) + ")");
  const int ell = p.rank();
  std::vector<CosetTuple> out;
  // Choose for each position j ≤ ℓ either j or its mirror.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ell); ++mask) {
    if (__builtin_popcountll(mask) % 2 != 0) continue;
    std::vector<int> t;
    t.reserve(static_cast<std::size_t>(ell));
    for (int j = 1; j <= ell; ++j)
      t.push_back((mask >> (j - 1)) & 1 ? p.mirror(j) : j);
    std::sort(t.begin(), t.end());
    out.emplace_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CosetTuple minimal_semistable(const RankParam& p, const Limits& limits) {
  const Weight varpi = spin_weight(p);
  std::vector<CosetTuple> semistable;
  for (const CosetTuple& w : enumerate_wp(p, limits))
    if (is_nonpositive_combination(act_on_weight(w, varpi, p), p)) semistable.push_back(w);
  std::vector<CosetTuple> minima;
  for (const CosetTuple& w : semistable) {
    bool minimal = std::none_of(semistable.begin(), semistable.end(), [&](const CosetTuple& u) {
      return u != w && bruhat_leq(u, w);
    });
    if (minimal) minima.push_back(w);
  }
  if (minima.size() != 1)
    throw std::logic_error("semistable locus has " + std::to_string(minima.size()) +
                           " minimal elements");
  return minima.front();
}

std::vector<int> tau_word(int i, const RankParam& p) {
  const int n = p.n();
  if (i < 1 || i > 2 * n) throw std::invalid_argument("tau index out of range");
  std::vector<int> word;
  for (int j = 2 * i - 1; j <= 4 * n; ++j) word.push_back(j);
  word.push_back(i % 2 == 0 ? 4 * n + 1 : 4 * n + 2);
  return word;
}

std::vector<int> schubert_word(int index, const RankParam& p) {
  const int n = p.n();
  std::vector<int> v1{4 * n + 2};
  for (int i = 2 * n; i >= 1; --i) {
    auto t = tau_word(i, p);
    v1.insert(v1.end(), t.begin(), t.end());
  }
  std::vector<int> prefix;
  switch (index) {
    case 1: break;
    case 2: prefix = {4 * n - 2}; break;
    case 3: prefix = {4 * n}; break;
    case 4: prefix = {4 * n - 2, 4 * n}; break;
    case 5: prefix = {4 * n + 1, 4 * n}; break;
    case 6: prefix = {4 * n - 2, 4 * n + 1, 4 * n}; break;
    default: throw std::invalid_argument("Schubert index must be in 1..6");
  }
  prefix.insert(prefix.end(), v1.begin(), v1.end());
  return prefix;
}

CosetTuple schubert_point(int index, const RankParam& p) {
  auto word = schubert_word(index, p);
  return coset_rep(word_to_element(word, p));
}

}  // namespace spinquot
