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

#include "spinquot/tableau.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace spinquot {

namespace {

// f(m) = #{entries ≤ m} for m = 1..8n+4.
std::vector<std::uint8_t> prefix_counts(const CosetTuple& row, const RankParam& p) {
  std::vector<std::uint8_t> f(static_cast<std::size_t>(p.ambient()), 0);
  for (int t : row) ++f[static_cast<std::size_t>(t - 1)];
  for (std::size_t m = 1; m < f.size(); ++m) f[m] = static_cast<std::uint8_t>(f[m] + f[m - 1]);
  return f;
}

}  // namespace

CosetTuple expand(const CompressedRow& small, const RankParam& p) {
  const int ell = p.rank();
  if (small.size() % 2 != 0) throw std::invalid_argument("compressed row must have even length");
  std::vector<bool> in(static_cast<std::size_t>(ell) + 1, false);
  int prev = 0;
  for (int t : small) {
    if (t < 1 || t > ell) throw std::invalid_argument("compressed row entry out of range");
    if (t <= prev) throw std::invalid_argument("compressed row must be strictly increasing");
    in[static_cast<std::size_t>(t)] = true;
    prev = t;
  }
  std::vector<int> row(small.begin(), small.end());
  for (int j = ell; j >= 1; --j)
    if (!in[static_cast<std::size_t>(j)]) row.push_back(p.mirror(j));
  return CosetTuple(std::move(row));
}

CompressedRow compress(const CosetTuple& row, const RankParam& p) {
  if (!row.is_wp_member(p)) throw std::invalid_argument("compress needs a W^P row " + row.to_string());
  CompressedRow small;
  for (int t : row)
    if (t <= p.rank()) small.push_back(t);
  return small;
}

std::uint32_t small_mask(const CosetTuple& row, const RankParam& p) {
  if (p.rank() > 31) throw std::invalid_argument("row masks support rank ≤ 31");
  std::uint32_t m = 0;
  for (int t : row)
    if (t <= p.rank()) m |= std::uint32_t{1} << (t - 1);
  return m;
}

CosetTuple row_from_mask(std::uint32_t mask, const RankParam& p) {
  CompressedRow small;
  for (int t = 1; t <= p.rank(); ++t)
    if (mask >> (t - 1) & 1U) small.push_back(t);
  return expand(small, p);
}

Tableau::Tableau(const RankParam& p, std::vector<CosetTuple> rows) : p_(p), rows_(std::move(rows)) {
  for (const CosetTuple& r : rows_) {
    if (static_cast<int>(r.size()) != p.rank())
      throw std::invalid_argument("tableau row must have 4n+2 entries: " + r.to_string());
    if (r.size() > 0 && r[r.size() - 1] > p.ambient())
      throw std::invalid_argument("tableau row entry exceeds 8n+4: " + r.to_string());
  }
}

Tableau Tableau::from_compressed(const RankParam& p, const std::vector<CompressedRow>& rows) {
  std::vector<CosetTuple> full;
  full.reserve(rows.size());
  for (const CompressedRow& r : rows) full.push_back(expand(r, p));
  return Tableau(p, std::move(full));
}

Tableau Tableau::operator*(const Tableau& other) const {
  if (!(p_ == other.p_)) throw std::invalid_argument("tableaux of different rank");
  std::vector<CosetTuple> rows = rows_;
  rows.insert(rows.end(), other.rows_.begin(), other.rows_.end());
  std::sort(rows.begin(), rows.end());
  return Tableau(p_, std::move(rows));
}

std::string Tableau::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_.size(); ++i) os << (i ? "," : "") << rows_[i].to_string();
  os << ']';
  return os.str();
}

bool is_spin_standard(const Tableau& t) {
  const auto& rows = t.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_wp_member(t.rank_param())) return false;
    if (i > 0 && !bruhat_leq(rows[i - 1], rows[i])) return false;
  }
  return true;
}

int content(const Tableau& t, int value) {
  int c = 0;
  for (const CosetTuple& r : t.rows())
    if (r.contains(value)) ++c;
  return c;
}

bool is_t_invariant(const Tableau& t) {
  const RankParam& p = t.rank_param();
  bool mirror_free = true;
  for (const CosetTuple& r : t.rows()) mirror_free = mirror_free && r.is_wp_member(p);
  for (int v = 1; v <= p.rank(); ++v) {
    const int c = content(t, v);
    if (c != content(t, p.mirror(v))) return false;
    // With every row mirror-free, c(t)+c(mirror t) is the row count.
    if (mirror_free && 2 * c != static_cast<int>(t.row_count()))
      throw std::logic_error("T-invariant tableau with c(t) != k");
  }
  return true;
}

bool rows_bounded(const Tableau& t, const CosetTuple& v) {
  return std::all_of(t.rows().begin(), t.rows().end(),
                     [&](const CosetTuple& r) { return bruhat_leq(r, v); });
}

RowSpace::RowSpace(const RankParam& p, const CosetTuple& v, const Limits& limits) : p_(p), v_(v) {
  if (!v.is_wp_member(p)) throw std::invalid_argument("bound must be a W^P tuple: " + v.to_string());
  for (CosetTuple& r : enumerate_wp(p, limits))
    if (bruhat_leq(r, v)) rows_.push_back(std::move(r));
  const std::size_t m = rows_.size();
  masks_.resize(m);
  for (std::size_t i = 0; i < m; ++i) masks_[i] = small_mask(rows_[i], p);
  above_.resize(m);
  prefix_.resize(m);
  for (std::size_t i = 0; i < m; ++i) prefix_[i] = prefix_counts(rows_[i], p);
  bound_prefix_ = prefix_counts(v, p);
  forced_in_.assign(m, (std::uint32_t{1} << p.rank()) - 1);
  possible_in_.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!bruhat_leq(rows_[i], rows_[j])) continue;
      above_[i].push_back(static_cast<std::uint32_t>(j));
      forced_in_[i] &= masks_[j];
      possible_in_[i] |= masks_[j];
    }
  }
}

namespace {

class InvariantCounter {
 public:
  InvariantCounter(const RowSpace& space, int k) : space_(space), k_(k), ell_(space.rank_param().rank()) {}

  // Whether the partial chain ending at row j, with `rem` rows still to
  // place, can still reach content k in every position.
  //
  // Besides the per-entry bounds, uses that f(m) = #{entries ≤ m} is
  // non-increasing down a standard tableau and must total m·k: the remaining
  // rows each contribute between f_v(m) and f_j(m).
  bool feasible(std::uint32_t j, int rem, const std::string& counts) const {
    const std::uint32_t forced = space_.forced_in(j);
    const std::uint32_t possible = space_.possible_in(j);
    for (int t = 0; t < ell_; ++t) {
      const int need = k_ - counts[static_cast<std::size_t>(t)];
      if (need < 0 || need > rem) return false;
      if ((forced >> t & 1U) && need != rem) return false;
      if (!(possible >> t & 1U) && need != 0) return false;
    }
    const int placed = 2 * k_ - rem;
    const int big_n = 2 * ell_;
    const auto& fj = space_.prefix(j);
    const auto& fv = space_.bound_prefix();
    int sum = 0;
    for (int m = 1; m < big_n; ++m) {
      sum += m <= ell_ ? counts[static_cast<std::size_t>(m - 1)]
                       : placed - counts[static_cast<std::size_t>(big_n - m)];
      const int missing = m * k_ - sum;
      const auto idx = static_cast<std::size_t>(m - 1);
      if (missing > rem * fj[idx] || missing < rem * fv[idx]) return false;
    }
    return true;
  }

  std::string extend(const std::string& counts, std::uint32_t j) const {
    std::string next = counts;
    const std::uint32_t m = space_.mask(j);
    for (int t = 0; t < ell_; ++t)
      if (m >> t & 1U) ++next[static_cast<std::size_t>(t)];
    return next;
  }

  std::uint64_t count(std::uint32_t last, int rem, const std::string& counts) {
    if (rem == 0) return 1;
    std::string key = counts;
    key.push_back(static_cast<char>(rem));
    key.append(reinterpret_cast<const char*>(&last), sizeof last);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::uint64_t total = 0;
    for (std::uint32_t j : space_.above(last)) {
      std::string next = extend(counts, j);
      if (feasible(j, rem - 1, next)) total += count(j, rem - 1, next);
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

  std::uint64_t total() {
    const std::string zero(static_cast<std::size_t>(ell_), '\0');
    std::uint64_t sum = 0;
    for (std::uint32_t j = 0; j < space_.size(); ++j) {
      std::string c = extend(zero, j);
      if (feasible(j, 2 * k_ - 1, c)) sum += count(j, 2 * k_ - 1, c);
    }
    return sum;
  }

  void enumerate(std::vector<Tableau>& out) {
    const std::string zero(static_cast<std::size_t>(ell_), '\0');
    std::vector<CosetTuple> chain;
    for (std::uint32_t j = 0; j < space_.size(); ++j) {
      std::string c = extend(zero, j);
      if (!feasible(j, 2 * k_ - 1, c) || count(j, 2 * k_ - 1, c) == 0) continue;
      chain.push_back(space_.rows()[j]);
      walk(j, 2 * k_ - 1, c, chain, out);
      chain.pop_back();
    }
  }

 private:
  void walk(std::uint32_t last, int rem, const std::string& counts, std::vector<CosetTuple>& chain,
            std::vector<Tableau>& out) {
    if (rem == 0) {
      out.emplace_back(space_.rank_param(), chain);
      return;
    }
    for (std::uint32_t j : space_.above(last)) {
      std::string next = extend(counts, j);
      if (!feasible(j, rem - 1, next) || count(j, rem - 1, next) == 0) continue;
      chain.push_back(space_.rows()[j]);
      walk(j, rem - 1, next, chain, out);
      chain.pop_back();
    }
  }

  const RowSpace& space_;
  int k_;
  int ell_;
  std::unordered_map<std::string, std::uint64_t> memo_;
};

void check_degree(int k, const Limits& limits) {
  if (k < 0) throw std::invalid_argument("degree must be non-negative");
  if (k > limits.max_degree)
    throw GuardExceeded("tableau degree " + std::to_string(k) + " exceeds limit " +
                        std::to_string(limits.max_degree));
}

}  // namespace

std::uint64_t count_invariant(const RowSpace& space, int k, const Limits& limits) {
  check_degree(k, limits);
  if (k == 0) return 1;
  return InvariantCounter(space, k).total();
}

std::vector<Tableau> enumerate_invariant(const RowSpace& space, int k, const Limits& limits) {
  check_degree(k, limits);
  std::vector<Tableau> out;
  if (k == 0) {
    out.emplace_back(space.rank_param(), std::vector<CosetTuple>{});
    return out;
  }
  InvariantCounter(space, k).enumerate(out);
  return out;
}

std::vector<Tableau> enumerate_invariant(const RankParam& p, int k, const CosetTuple& v,
                                         const Limits& limits) {
  return enumerate_invariant(RowSpace(p, v, limits), k, limits);
}

}  // namespace spinquot
