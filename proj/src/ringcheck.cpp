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

#include "spinquot/ringcheck.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "spinquot/linalg.hpp"

namespace spinquot {

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::uint64_t dim_rk(const RankParam& p, const CosetTuple& v, int k, const Limits& limits) {
  return count_invariant(RowSpace(p, v, limits), k, limits);
}

GradedDims graded_dims(const RankParam& p, const CosetTuple& v, int kmax, const Limits& limits) {
  if (kmax < 0) throw std::invalid_argument("kmax must be non-negative");
  RowSpace space(p, v, limits);
  GradedDims out{v, {}};
  for (int k = 0; k <= kmax; ++k) out.dims.push_back(count_invariant(space, 2 * k, limits));
  return out;
}

Prop11Case parse_prop11_case(const std::string& text) {
  std::string t;
  for (char c : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "i") return Prop11Case::I;
  if (t == "ii") return Prop11Case::II;
  if (t == "iii") return Prop11Case::III;
  if (t == "iv") return Prop11Case::IV;
  if (t == "v") return Prop11Case::V;
  throw std::invalid_argument("case must be one of i, ii, iii, iv, v");
}

std::string to_string(Prop11Case c) {
  switch (c) {
    case Prop11Case::I: return "i";
    case Prop11Case::II: return "ii";
    case Prop11Case::III: return "iii";
    case Prop11Case::IV: return "iv";
    case Prop11Case::V: return "v";
  }
  return "?";
}

std::uint64_t prop11_expected(Prop11Case c, int k) {
  const auto kk = static_cast<std::uint64_t>(k);
  switch (c) {
    case Prop11Case::I: return 1;
    case Prop11Case::II:
    case Prop11Case::III: return 2 * kk + 1;
    case Prop11Case::IV: return binomial(2 * kk + 3, 3);
    case Prop11Case::V: return binomial(2 * kk + 2, 2);
  }
  return 0;
}

Prop11Report verify_prop11(Prop11Case which, const RankParam& p, int kmax, const Limits& limits) {
  Prop11Report report;
  report.which = which;
  report.n = p.n();
  report.v = schubert_point(static_cast<int>(which), p);
  const GradedDims dims = graded_dims(p, report.v, kmax, limits);
  for (int k = 0; k <= kmax; ++k) {
    Prop11Row row{k, dims.dims[static_cast<std::size_t>(k)], prop11_expected(which, k)};
    if (row.dim != row.expected && !report.first_failure) report.first_failure = k;
    report.rows.push_back(row);
  }
  report.pass = !report.first_failure.has_value();
  return report;
}

namespace {

using RowMultiset = std::vector<CosetTuple>;

class ExactCover {
 public:
  explicit ExactCover(const RankParam& p) {
    for (Generator g : all_generators()) {
      RowMultiset rows = generator(g, p).rows();
      std::sort(rows.begin(), rows.end());
      blocks_.emplace_back(g, std::move(rows));
    }
  }

  bool solve(const RowMultiset& remaining, std::vector<Generator>& out) {
    if (remaining.empty()) return true;
    if (dead_.count(remaining)) return false;
    const CosetTuple& first = remaining.front();
    for (const auto& [g, rows] : blocks_) {
      if (!std::binary_search(rows.begin(), rows.end(), first)) continue;
      if (!std::includes(remaining.begin(), remaining.end(), rows.begin(), rows.end())) continue;
      RowMultiset rest;
      std::set_difference(remaining.begin(), remaining.end(), rows.begin(), rows.end(),
                          std::back_inserter(rest));
      out.push_back(g);
      if (solve(rest, out)) return true;
      out.pop_back();
    }
    dead_.insert(remaining);
    return false;
  }

 private:
  std::vector<std::pair<Generator, RowMultiset>> blocks_;
  std::set<RowMultiset> dead_;
};

bool witness_valid(const Tableau& t, const std::vector<Generator>& blocks) {
  RowMultiset rows;
  for (Generator g : blocks) {
    const Tableau b = generator(g, t.rank_param());
    rows.insert(rows.end(), b.rows().begin(), b.rows().end());
  }
  RowMultiset target = t.rows();
  std::sort(rows.begin(), rows.end());
  std::sort(target.begin(), target.end());
  return rows == target;
}

}  // namespace

std::optional<std::vector<Generator>> factor_into_generators(const Tableau& t) {
  ExactCover cover(t.rank_param());
  RowMultiset rows = t.rows();
  std::sort(rows.begin(), rows.end());
  std::vector<Generator> out;
  if (!cover.solve(rows, out)) return std::nullopt;
  return out;
}

Lemma51Report verify_lemma51(const RankParam& p, int kmax, const Limits& limits, bool keep_witnesses) {
  Lemma51Report report;
  report.n = p.n();
  report.kmax = kmax;
  const RowSpace space(p, schubert_point(6, p), limits);
  ExactCover cover(p);
  for (int degree = 1; degree <= 2 * kmax; ++degree) {
    const std::vector<Tableau> tableaux = enumerate_invariant(space, degree, limits);
    report.checked.push_back(tableaux.size());
    for (const Tableau& t : tableaux) {
      RowMultiset rows = t.rows();
      std::sort(rows.begin(), rows.end());
      std::vector<Generator> blocks;
      if (cover.solve(rows, blocks) && witness_valid(t, blocks)) {
        if (keep_witnesses) report.witnesses.push_back({t, std::move(blocks)});
      } else {
        report.failures.push_back(t);
      }
    }
  }
  report.pass = report.failures.empty();
  return report;
}

std::vector<std::pair<std::string, Tableau>> degree_one_elements(const RankParam& p) {
  const std::vector<Generator> xs = {Generator::X1, Generator::X2, Generator::X3,
                                     Generator::X4, Generator::X5, Generator::X6};
  std::vector<std::pair<std::string, Tableau>> out;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i; j < xs.size(); ++j)
      out.emplace_back(generator_name(xs[i]) + generator_name(xs[j]),
                       generator(xs[i], p) * generator(xs[j], p));
  out.emplace_back("Y3", generator(Generator::Y3, p));
  return out;
}

Thm51Report verify_thm51(const RankParam& p, int kmax, const Limits& limits, std::size_t max_steps) {
  Thm51Report report;
  report.n = p.n();
  report.kmax = kmax;
  const CosetTuple v6 = schubert_point(6, p);
  auto table = std::make_shared<const RowTable>(p, limits);
  Straightener s(table);
  NormalFormOptions options;
  options.bound = v6;
  options.max_steps = max_steps;
  const RowSpace space(p, v6, limits);

  std::vector<QPolynomial> elements;
  for (const auto& [name, t] : degree_one_elements(p))
    elements.push_back(s.normal_form(QPolynomial::from_tableau(table, t), options));

  // Products of k elements, keyed by the non-decreasing index list; level k
  // extends level k−1 by an index ≥ the last one.
  std::map<std::vector<std::size_t>, QPolynomial> level;
  level.emplace(std::vector<std::size_t>{}, QPolynomial::monomial(table, {}, Rational(1)));
  bool pass = true;
  for (int k = 1; k <= kmax; ++k) {
    std::map<std::vector<std::size_t>, QPolynomial> next;
    for (const auto& [key, poly] : level) {
      const std::size_t start = key.empty() ? 0 : key.back();
      for (std::size_t e = start; e < elements.size(); ++e) {
        std::vector<std::size_t> nk = key;
        nk.push_back(e);
        next.emplace(std::move(nk), s.normal_form(poly * elements[e], options));
      }
    }
    level = std::move(next);

    const std::vector<Tableau> basis = enumerate_invariant(space, 2 * k, limits);
    std::map<QMonomial, std::size_t> column;
    for (const Tableau& t : basis) {
      QMonomial m;
      for (const CosetTuple& r : t.rows()) m.push_back(table->id(r));
      std::sort(m.begin(), m.end());
      column.emplace(std::move(m), column.size());
    }
    EchelonBasis span(basis.size());
    for (const auto& [key, poly] : level) {
      if (span.full()) break;
      std::vector<Rational> vec(basis.size());
      for (const auto& [m, c] : poly.terms()) {
        auto it = column.find(m);
        if (it == column.end())
          throw std::logic_error("straightened product left the invariant basis: " +
                                 monomial_to_string(*table, m));
        vec[it->second] = c;
      }
      span.insert(std::move(vec));
    }
    report.rows.push_back({k, basis.size(), span.rank(), level.size()});
    pass = pass && span.full();
  }
  report.pass = pass;
  return report;
}

Rational evaluate_tableau(const Tableau& t, const SkewMatrix& a) {
  if (a.size() != t.rank_param().rank()) throw std::invalid_argument("matrix size does not match the rank");
  Rational prod = 1;
  for (const CosetTuple& r : t.rows()) prod *= q(r, a);
  return prod;
}

}  // namespace spinquot
