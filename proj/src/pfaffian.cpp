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

#include "spinquot/pfaffian.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace spinquot {

namespace {

void check_index_set(const IndexSet& s, int size) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > size) throw std::invalid_argument("index out of range");
    if (i > 0 && s[i - 1] >= s[i]) throw std::invalid_argument("index set must be sorted and distinct");
  }
}

std::uint32_t to_mask(const IndexSet& s) {
  std::uint32_t m = 0;
  for (int i : s) m |= std::uint32_t{1} << (i - 1);
  return m;
}

IndexSet from_mask(std::uint32_t m) {
  IndexSet s;
  for (int i = 1; m != 0; ++i, m >>= 1)
    if (m & 1U) s.push_back(i);
  return s;
}

// Expansion along the smallest index: the j-th partner (counting from 1)
// carries sign (−1)^(j+1).
Rational expand_plain(const SkewMatrix& a, std::uint32_t mask) {
  if (mask == 0) return Rational(1);
  if (__builtin_popcount(mask) % 2 != 0) return Rational(0);
  const int first = __builtin_ctz(mask);
  const std::uint32_t rest = mask & (mask - 1);
  Rational total = 0;
  int position = 0;
  for (std::uint32_t m = rest; m != 0; m &= m - 1) {
    const int j = __builtin_ctz(m);
    ++position;
    const Rational& x = a.entry(first + 1, j + 1);
    if (x == 0) continue;
    Rational sub = expand_plain(a, rest & ~(std::uint32_t{1} << j));
    if (position % 2 == 1)
      total += x * sub;
    else
      total -= x * sub;
  }
  return total;
}

}  // namespace

SkewMatrix::SkewMatrix(int size) : size_(size) {
  if (size < 0) throw std::invalid_argument("matrix size must be non-negative");
  a_.assign(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), Rational(0));
}

SkewMatrix::SkewMatrix(const RationalMatrix& m) : SkewMatrix(static_cast<int>(m.size())) {
  for (int i = 1; i <= size_; ++i) {
    const auto& row = m[static_cast<std::size_t>(i - 1)];
    if (static_cast<int>(row.size()) != size_) throw std::invalid_argument("matrix is not square");
    for (int j = 1; j <= size_; ++j) {
      const Rational& x = row[static_cast<std::size_t>(j - 1)];
      const Rational& y = m[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)];
      if (x != -y)
        throw std::invalid_argument("matrix is not skew-symmetric at (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
      a_[static_cast<std::size_t>((i - 1) * size_ + (j - 1))] = x;
    }
  }
}

void SkewMatrix::set(int i, int j, const Rational& value) {
  if (i < 1 || j < 1 || i > size_ || j > size_ || i == j)
    throw std::invalid_argument("invalid off-diagonal position");
  a_[static_cast<std::size_t>((i - 1) * size_ + (j - 1))] = value;
  a_[static_cast<std::size_t>((j - 1) * size_ + (i - 1))] = -value;
}

RationalMatrix SkewMatrix::dense() const {
  RationalMatrix m(static_cast<std::size_t>(size_), std::vector<Rational>(static_cast<std::size_t>(size_)));
  for (int i = 1; i <= size_; ++i)
    for (int j = 1; j <= size_; ++j) m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = entry(i, j);
  return m;
}

SkewMatrix SkewMatrix::principal(const IndexSet& indices) const {
  check_index_set(indices, size_);
  const int m = static_cast<int>(indices.size());
  SkewMatrix out(m);
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      out.set(i, j, entry(indices[static_cast<std::size_t>(i - 1)], indices[static_cast<std::size_t>(j - 1)]));
  return out;
}

Rational pfaffian(const SkewMatrix& a) {
  if (a.size() > 31) throw std::invalid_argument("pfaffian supports size ≤ 31");
  const std::uint32_t all = a.size() == 0 ? 0 : (std::uint32_t{1} << a.size()) - 1;
  if (a.size() <= 8) return expand_plain(a, all);
  PfaffianTable table(a);
  return table(all);
}

Rational sub_pfaffian(const SkewMatrix& a, const IndexSet& indices) {
  check_index_set(indices, a.size());
  if (indices.size() % 2 != 0) return Rational(0);
  return pfaffian(a.principal(indices));
}

PfaffianTable::PfaffianTable(SkewMatrix a) : a_(std::move(a)) {
  if (a_.size() > 31) throw std::invalid_argument("pfaffian table supports size ≤ 31");
}

const Rational& PfaffianTable::operator()(std::uint32_t mask) {
  if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
  Rational total = 0;
  if (mask == 0) {
    total = 1;
  } else if (__builtin_popcount(mask) % 2 == 0) {
    const int first = __builtin_ctz(mask);
    const std::uint32_t rest = mask & (mask - 1);
    int position = 0;
    for (std::uint32_t m = rest; m != 0; m &= m - 1) {
      const int j = __builtin_ctz(m);
      ++position;
      const Rational& x = a_.entry(first + 1, j + 1);
      if (x == 0) continue;
      const Rational& sub = (*this)(rest & ~(std::uint32_t{1} << j));
      if (position % 2 == 1)
        total += x * sub;
      else
        total -= x * sub;
    }
  }
  return memo_.emplace(mask, std::move(total)).first->second;
}

Rational PfaffianTable::operator()(const IndexSet& indices) {
  check_index_set(indices, a_.size());
  return (*this)(to_mask(indices));
}

DualPair dual_pair(const CosetTuple& row, const RankParam& p) {
  DualPair d;
  for (int t : row)
    if (t > p.rank()) d.a.push_back(p.mirror(t));
  std::sort(d.a.begin(), d.a.end());
  for (int j = 1; j <= p.rank(); ++j)
    if (!row.contains(j)) d.b.push_back(j);
  return d;
}

namespace {

RankParam param_for_size(int size) {
  if (size < 6 || (size - 2) % 4 != 0) throw std::invalid_argument("matrix size must be 4n+2");
  return RankParam((size - 2) / 4);
}

const IndexSet& checked_b(const DualPair& d, const CosetTuple& row) {
  if (d.a != d.b) throw std::invalid_argument("dual pair mismatch for " + row.to_string());
  return d.b;
}

}  // namespace

Rational q(const CosetTuple& row, const SkewMatrix& a) {
  const RankParam p = param_for_size(a.size());
  return sub_pfaffian(a, checked_b(dual_pair(row, p), row));
}

Rational q(const CosetTuple& row, PfaffianTable& table) {
  const RankParam p = param_for_size(table.matrix().size());
  return table(checked_b(dual_pair(row, p), row));
}

CosetTuple remark25_tuple(const IndexSet& indices, const RankParam& p) {
  check_index_set(indices, p.rank());
  std::vector<int> t;
  for (int j = 1; j <= p.rank(); ++j)
    if (!std::binary_search(indices.begin(), indices.end(), j)) t.push_back(j);
  for (auto it = indices.rbegin(); it != indices.rend(); ++it) t.push_back(p.mirror(*it));
  return CosetTuple(std::move(t));
}

Rational exchange_residual(const SkewMatrix& a, const IndexSet& i1, const IndexSet& i2) {
  check_index_set(i1, a.size());
  check_index_set(i2, a.size());
  if (i1.size() % 2 == 0 || i2.size() % 2 == 0)
    throw std::invalid_argument("exchange identity needs odd-cardinality sets");
  PfaffianTable table(a);
  return exchange_residual(table, i1, i2);
}

Rational exchange_residual(PfaffianTable& table, const IndexSet& i1, const IndexSet& i2) {
  check_index_set(i1, table.matrix().size());
  check_index_set(i2, table.matrix().size());
  if (i1.size() % 2 == 0 || i2.size() % 2 == 0)
    throw std::invalid_argument("exchange identity needs odd-cardinality sets");
  const std::uint32_t m1 = to_mask(i1);
  const std::uint32_t m2 = to_mask(i2);
  Rational total = 0;
  int tau = 0;
  for (int i : from_mask(m1 ^ m2)) {
    ++tau;
    const std::uint32_t bit = std::uint32_t{1} << (i - 1);
    Rational term = table(m1 ^ bit) * table(m2 ^ bit);
    if (tau % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

Thm23Report verify_thm23(const RankParam& p, std::uint64_t seed, std::size_t matrices,
                         std::size_t triples) {
  Thm23Report report;
  report.n = p.n();
  report.seed = seed;
  const int size = p.rank();
  const std::uint32_t full = (std::uint32_t{1} << size) - 1;
  SeededRng root = SeededRng(seed).split(23);
  auto record = [&](PfaffianTable& table, std::size_t index, const IndexSet& i1, const IndexSet& i2) {
    ++report.checks;
    Rational r = exchange_residual(table, i1, i2);
    if (r != 0) report.failures.push_back({index, i1, i2, std::move(r)});
  };
  if (p.n() == 1) {
    std::vector<IndexSet> odd;
    for (std::uint32_t m = 0; m <= full; ++m)
      if (std::popcount(m) % 2 == 1) odd.push_back(from_mask(m));
    for (std::size_t k = 0; k < matrices; ++k) {
      SeededRng rng = root.split(k);
      PfaffianTable table(random_skew(size, rng));
      ++report.matrices;
      for (const IndexSet& i1 : odd)
        for (const IndexSet& i2 : odd) record(table, k, i1, i2);
    }
    return report;
  }
  auto random_odd = [&](SeededRng& rng) {
    for (;;) {
      const auto m = static_cast<std::uint32_t>(rng.uniform(0, full));
      if (std::popcount(m) % 2 == 1) return from_mask(m);
    }
  };
  for (std::size_t k = 0; k < triples; ++k) {
    SeededRng rng = root.split(k);
    PfaffianTable table(random_skew(size, rng));
    ++report.matrices;
    const IndexSet i1 = random_odd(rng);
    const IndexSet i2 = random_odd(rng);
    record(table, k, i1, i2);
  }
  return report;
}

SkewMatrix reference_matrix(const RankParam& p) {
  SkewMatrix a(p.rank());
  const int gap = 2 * p.n() + 1;
  for (int i = 1; i + gap <= p.rank(); ++i) a.set(i, i + gap, Rational(1));
  return a;
}

SkewMatrix random_skew(int size, SeededRng& rng, std::int64_t bound) {
  SkewMatrix a(size);
  for (int i = 1; i <= size; ++i)
    for (int j = i + 1; j <= size; ++j) a.set(i, j, Rational(static_cast<long>(rng.uniform(-bound, bound))));
  return a;
}

std::size_t skew_variable(int size, int i, int j) {
  if (!(1 <= i && i < j && j <= size)) throw std::invalid_argument("need 1 ≤ i < j ≤ size");
  // Entries of earlier rows: (size−1) + (size−2) + … over rows 1..i−1.
  const auto s = static_cast<std::size_t>(size);
  const auto r = static_cast<std::size_t>(i - 1);
  return r * s - r * (r + 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

SparsePolynomial symbolic_sub_pfaffian(int size, const IndexSet& indices) {
  check_index_set(indices, size);
  const std::size_t vars = static_cast<std::size_t>(size) * static_cast<std::size_t>(size - 1) / 2;
  if (indices.empty()) return SparsePolynomial::constant(vars, Rational(1));
  if (indices.size() % 2 != 0) return SparsePolynomial(vars);
  SparsePolynomial total(vars);
  const int first = indices.front();
  for (std::size_t pos = 1; pos < indices.size(); ++pos) {
    IndexSet rest;
    for (std::size_t k = 1; k < indices.size(); ++k)
      if (k != pos) rest.push_back(indices[k]);
    SparsePolynomial term =
        SparsePolynomial::variable(vars, skew_variable(size, first, indices[pos])) *
        symbolic_sub_pfaffian(size, rest);
    if (pos % 2 == 1)
      total += term;
    else
      total -= term;
  }
  return total;
}

}  // namespace spinquot
