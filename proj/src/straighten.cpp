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

#include "spinquot/straighten.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "spinquot/linalg.hpp"

namespace spinquot {

namespace {

constexpr RowId kNoRow = static_cast<RowId>(-1);

int entry_sum(const CosetTuple& t) { return std::accumulate(t.begin(), t.end(), 0); }

std::string compressed_string(const CosetTuple& row, const RankParam& p) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (int t : row) {
    if (t > p.rank()) break;
    os << (first ? "" : ",") << t;
    first = false;
  }
  os << ')';
  return os.str();
}

}  // namespace

RowTable::RowTable(const RankParam& p, const Limits& limits) : p_(p) {
  if (p.rank() > 26) throw GuardExceeded("row table supports n ≤ 6");
  rows_ = enumerate_wp(p, limits);
  std::stable_sort(rows_.begin(), rows_.end(), [](const CosetTuple& a, const CosetTuple& b) {
    const int sa = entry_sum(a);
    const int sb = entry_sum(b);
    return sa != sb ? sa < sb : a < b;
  });
  const std::uint32_t full = (std::uint32_t{1} << p.rank()) - 1;
  by_b_mask_.assign(std::size_t{1} << p.rank(), kNoRow);
  b_masks_.reserve(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::uint32_t b = full & ~small_mask(rows_[i], p);
    b_masks_.push_back(b);
    by_b_mask_[b] = static_cast<RowId>(i);
  }
}

RowId RowTable::id(const CosetTuple& row) const {
  if (!row.is_wp_member(p_)) throw std::invalid_argument("not a W^P row: " + row.to_string());
  const std::uint32_t full = (std::uint32_t{1} << p_.rank()) - 1;
  return id_of_b_mask(full & ~small_mask(row, p_));
}

RowId RowTable::id_of_b_mask(std::uint32_t mask) const {
  if (mask >= by_b_mask_.size() || by_b_mask_[mask] == kNoRow)
    throw std::invalid_argument("index set of odd size has no row");
  return by_b_mask_[mask];
}

bool RowTable::leq(RowId a, RowId b) const { return bruhat_leq(rows_.at(a), rows_.at(b)); }

QPolynomial::QPolynomial(std::shared_ptr<const RowTable> table) : table_(std::move(table)) {
  if (!table_) throw std::invalid_argument("QPolynomial needs a row table");
}

QPolynomial QPolynomial::monomial(std::shared_ptr<const RowTable> table, QMonomial rows,
                                  const Rational& c) {
  QPolynomial out(std::move(table));
  out.add(std::move(rows), c);
  return out;
}

QPolynomial QPolynomial::from_tableau(std::shared_ptr<const RowTable> table, const Tableau& t,
                                      const Rational& c) {
  if (!(t.rank_param() == table->rank_param())) throw std::invalid_argument("rank mismatch");
  QMonomial rows;
  for (const CosetTuple& r : t.rows()) rows.push_back(table->id(r));
  return monomial(std::move(table), std::move(rows), c);
}

void QPolynomial::add(QMonomial rows, const Rational& c) {
  if (c == 0) return;
  std::sort(rows.begin(), rows.end());
  auto [it, inserted] = terms_.try_emplace(std::move(rows), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void QPolynomial::check_compatible(const QPolynomial& other) const {
  if (table_ != other.table_ && !(table_->rank_param() == other.table_->rank_param()))
    throw std::invalid_argument("QPolynomials over different rank");
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add(m, -c);
  return *this;
}

QPolynomial& QPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  a.check_compatible(b);
  QPolynomial out(a.table_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      QMonomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add(std::move(m), ca * cb);
    }
  }
  return out;
}

QPolynomial QPolynomial::operator-() const {
  QPolynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Rational QPolynomial::evaluate(PfaffianTable& pf) const {
  if (pf.matrix().size() != table_->rank_param().rank())
    throw std::invalid_argument("matrix size does not match the rank");
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational prod = c;
    for (RowId r : m) {
      prod *= pf(table_->b_mask(r));
      if (prod == 0) break;
    }
    total += prod;
  }
  return total;
}

std::string monomial_to_string(const RowTable& table, const QMonomial& rows) {
  std::string out;
  for (RowId r : rows) out += compressed_string(table.row(r), table.rank_param());
  return out;
}

std::string QPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << ' ';
    first = false;
    os << (c > 0 ? "+" : "") << c.get_str() << ' ' << monomial_to_string(*table_, m);
  }
  return os.str();
}

bool is_standard_monomial(const RowTable& table, const QMonomial& rows) {
  QMonomial sorted = rows;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (!table.leq(sorted[i - 1], sorted[i])) return false;
  return true;
}

Straightener::Straightener(std::shared_ptr<const RowTable> table) : table_(std::move(table)) {
  if (!table_) throw std::invalid_argument("Straightener needs a row table");
}

const Straightener::WeightLaws& Straightener::solve_weight(std::uint32_t common, std::uint32_t diff) {
  const std::uint64_t key = (std::uint64_t{common} << 32) | diff;
  if (auto it = weights_.find(key); it != weights_.end()) return it->second;

  std::vector<int> d;
  for (std::uint32_t m = diff; m != 0; m &= m - 1) d.push_back(__builtin_ctz(m));
  const std::uint32_t lead = std::uint32_t{1} << d.front();
  const std::uint32_t rest = diff & ~lead;
  const int parity = __builtin_popcount(common) & 1;
  const RowTable& rt = *table_;

  // Unknowns: unordered pairs {C∪E, C∪(D∖E)}, represented by the side E
  // holding the least element of D. Nonstandard pairs take the first columns.
  std::vector<std::uint32_t> nonstandard;
  std::vector<std::uint32_t> standard;
  for (std::uint32_t s = rest;; s = (s - 1) & rest) {
    const std::uint32_t e = lead | s;
    if ((__builtin_popcount(e) & 1) == parity) {
      const RowId a = rt.id_of_b_mask(common | e);
      const RowId b = rt.id_of_b_mask(common | (diff & ~e));
      const bool comparable = a < b ? rt.leq(a, b) : rt.leq(b, a);
      (comparable ? standard : nonstandard).push_back(e);
    }
    if (s == 0) break;
  }
  std::vector<std::uint32_t> columns = nonstandard;
  columns.insert(columns.end(), standard.begin(), standard.end());
  std::unordered_map<std::uint32_t, std::size_t> column_of;
  for (std::size_t i = 0; i < columns.size(); ++i) column_of.emplace(columns[i], i);

  // One exchange relation per odd-parity split (I1, I2) = (C∪E', C∪(D∖E')).
  RationalMatrix relations;
  for (std::uint32_t s = rest;; s = (s - 1) & rest) {
    const std::uint32_t e = lead | s;
    if ((__builtin_popcount(e) & 1) != parity) {
      std::vector<Rational> row(columns.size());
      for (std::size_t tau = 1; tau <= d.size(); ++tau) {
        std::uint32_t f = e ^ (std::uint32_t{1} << d[tau - 1]);
        if (!(f & lead)) f = diff & ~f;
        row[column_of.at(f)] += (tau % 2 == 0) ? 1 : -1;
      }
      relations.push_back(std::move(row));
    }
    if (s == 0) break;
  }

  WeightLaws laws;
  if (!nonstandard.empty()) {
    const std::vector<std::size_t> pivots = reduce_to_rref(relations);
    for (std::size_t c = 0; c < nonstandard.size(); ++c) {
      auto it = std::find(pivots.begin(), pivots.end(), c);
      const std::uint32_t e = nonstandard[c];
      const RowId x = rt.id_of_b_mask(common | e);
      const RowId y = rt.id_of_b_mask(common | (diff & ~e));
      if (it == pivots.end())
        throw StraighteningError("exchange relations do not straighten " + rt.row(x).to_string() +
                                 " * " + rt.row(y).to_string());
      const auto& rel = relations[static_cast<std::size_t>(it - pivots.begin())];
      std::vector<PairTerm> terms;
      for (std::size_t j = 0; j < columns.size(); ++j) {
        if (j == c || rel[j] == 0) continue;
        if (j < nonstandard.size())
          throw StraighteningError("straightening law mixes nonstandard pairs");
        RowId a = rt.id_of_b_mask(common | columns[j]);
        RowId b = rt.id_of_b_mask(common | (diff & ~columns[j]));
        if (b < a) std::swap(a, b);
        // Ordering property: the lower row drops strictly below both inputs.
        if (!(rt.leq(a, x) && a != x && rt.leq(a, y) && a != y))
          throw StraighteningError("straightening law for " + rt.row(x).to_string() + " * " +
                                   rt.row(y).to_string() + " has term " + rt.row(a).to_string() +
                                   " not below both rows");
        terms.push_back({a, b, -rel[j] / rel[c]});
      }
      std::sort(terms.begin(), terms.end(),
                [](const PairTerm& l, const PairTerm& r) { return std::tie(l.a, l.b) < std::tie(r.a, r.b); });
      laws.emplace(e, std::move(terms));
    }
  }
  return weights_.emplace(key, std::move(laws)).first->second;
}

const std::vector<PairTerm>& Straightener::law(RowId x, RowId y) {
  const RowTable& rt = *table_;
  if (y < x) std::swap(x, y);
  if (rt.leq(x, y)) {
    auto key = std::make_pair(x, y);
    auto it = standard_.find(key);
    if (it == standard_.end())
      it = standard_.emplace(key, std::vector<PairTerm>{{x, y, Rational(1)}}).first;
    return it->second;
  }
  const std::uint32_t bx = rt.b_mask(x);
  const std::uint32_t by = rt.b_mask(y);
  const std::uint32_t common = bx & by;
  const std::uint32_t diff = bx ^ by;
  const std::uint32_t lead = diff & (~diff + 1);
  const std::uint32_t e = ((bx & lead) ? bx : by) & diff;
  return solve_weight(common, diff).at(e);
}

QPolynomial Straightener::straighten_pair(RowId x, RowId y) {
  QPolynomial out(table_);
  for (const PairTerm& t : law(x, y)) out.add({t.a, t.b}, t.coefficient);
  return out;
}

QPolynomial Straightener::straighten_pair(const CosetTuple& x, const CosetTuple& y) {
  return straighten_pair(table_->id(x), table_->id(y));
}

QPolynomial Straightener::normal_form(const QPolynomial& p, const NormalFormOptions& options) {
  if (p.table_ptr() != table_ && !(p.table().rank_param() == table_->rank_param()))
    throw std::invalid_argument("polynomial rank does not match the straightener");
  const RowTable& rt = *table_;
  std::vector<bool> allowed;
  if (options.bound) {
    allowed.resize(rt.size());
    for (RowId r = 0; r < rt.size(); ++r) allowed[r] = bruhat_leq(rt.row(r), *options.bound);
  }

  std::map<QMonomial, Rational> pending(p.terms().begin(), p.terms().end());
  QPolynomial result(table_);
  std::size_t steps = 0;
  while (!pending.empty()) {
    auto node = pending.extract(std::prev(pending.end()));
    const QMonomial& m = node.key();
    const Rational& c = node.mapped();
    if (!allowed.empty() &&
        std::any_of(m.begin(), m.end(), [&](RowId r) { return !allowed[r]; }))
      continue;

    std::size_t bi = m.size();
    std::size_t bj = m.size();
    const std::size_t len = m.size();
    if (options.strategy == NormalFormOptions::Strategy::kFirstPair) {
      for (std::size_t i = 0; i < len && bi == len; ++i)
        for (std::size_t j = i + 1; j < len; ++j)
          if (m[i] != m[j] && !rt.leq(m[i], m[j])) {
            bi = i;
            bj = j;
            break;
          }
    } else {
      for (std::size_t j = len; j-- > 0 && bi == len;)
        for (std::size_t i = j; i-- > 0;)
          if (m[i] != m[j] && !rt.leq(m[i], m[j])) {
            bi = i;
            bj = j;
            break;
          }
    }
    if (bi == len) {
      result.add(m, c);
      continue;
    }
    if (++steps > options.max_steps)
      throw StraighteningError("normal form exceeded " + std::to_string(options.max_steps) + " steps");
    used_.emplace(m[bi], m[bj]);
    QMonomial base;
    base.reserve(len);
    for (std::size_t k = 0; k < len; ++k)
      if (k != bi && k != bj) base.push_back(m[k]);
    for (const PairTerm& t : law(m[bi], m[bj])) {
      QMonomial next = base;
      next.push_back(t.a);
      next.push_back(t.b);
      std::sort(next.begin(), next.end());
      Rational coeff = c * t.coefficient;
      auto [it, inserted] = pending.try_emplace(std::move(next), coeff);
      if (!inserted) {
        it->second += coeff;
        if (it->second == 0) pending.erase(it);
      }
    }
  }
  return result;
}

QPolynomial restrict_to_schubert(const QPolynomial& p, const CosetTuple& v,
                                 std::vector<QMonomial>& dropped) {
  const RowTable& rt = p.table();
  QPolynomial out(p.table_ptr());
  for (const auto& [m, c] : p.terms()) {
    if (!is_standard_monomial(rt, m))
      throw std::invalid_argument("restriction needs standard monomials; got " +
                                  monomial_to_string(rt, m));
    if (std::all_of(m.begin(), m.end(), [&](RowId r) { return bruhat_leq(rt.row(r), v); }))
      out.add(m, c);
    else
      dropped.push_back(m);
  }
  return out;
}

QPolynomial restrict_to_schubert(const QPolynomial& p, const CosetTuple& v) {
  std::vector<QMonomial> dropped;
  return restrict_to_schubert(p, v, dropped);
}

}  // namespace spinquot
