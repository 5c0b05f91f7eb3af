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

#include <algorithm>
#include <unordered_map>

#include "spinquot/straighten.hpp"

namespace spinquot {

namespace {

struct GeneratorSpec {
  Generator g;
  const char* name;
  std::vector<const char*> rows;
};

const std::vector<GeneratorSpec>& generator_specs() {
  static const std::vector<GeneratorSpec> specs = {
      {Generator::X1, "X1", {"Obde", "Eac"}},
      {Generator::X2, "X2", {"Oade", "Ebc"}},
      {Generator::X3, "X3", {"Obce", "Ead"}},
      {Generator::X4, "X4", {"Oace", "Ebd"}},
      {Generator::X5, "X5", {"Obcd", "Eae"}},
      {Generator::X6, "X6", {"Oacd", "Ebe"}},
      {Generator::Y1, "Y1", {"Oabe", "Ocde", "Eac", "Ebd"}},
      {Generator::Y2, "Y2", {"Oabd", "Ocde", "Eac", "Ebe"}},
      {Generator::Y3, "Y3", {"Oabcde", "Oc", "Ead", "Ebe"}},
      {Generator::Y4, "Y4", {"Oabc", "Ocde", "Ead", "Ebe"}},
      {Generator::Z1, "Z1", {"Oabc", "Oade", "Ocde", "Eac", "Ebd", "Ebe"}},
      {Generator::Z2, "Z2", {"Oabcde", "Oade", "Oc", "Eac", "Ebd", "Ebe"}},
  };
  return specs;
}

const GeneratorSpec& spec_of(Generator g) {
  for (const GeneratorSpec& s : generator_specs())
    if (s.g == g) return s;
  throw std::invalid_argument("unknown generator");
}

}  // namespace

std::vector<Generator> all_generators() {
  std::vector<Generator> out;
  for (const GeneratorSpec& s : generator_specs()) out.push_back(s.g);
  return out;
}

std::string generator_name(Generator g) { return spec_of(g).name; }

Generator generator_from_name(std::string_view name) {
  for (const GeneratorSpec& s : generator_specs())
    if (name == s.name) return s.g;
  throw std::invalid_argument("unknown generator name: " + std::string(name));
}

CompressedRow block_row(std::string_view spec, const RankParam& p) {
  const int n = p.n();
  CompressedRow row;
  for (char ch : spec) {
    if (ch == 'O') {
      for (int t = 1; t <= 4 * n - 3; t += 2) row.push_back(t);
    } else if (ch == 'E') {
      for (int t = 2; t <= 4 * n - 4; t += 2) row.push_back(t);
    } else if (ch >= 'a' && ch <= 'e') {
      row.push_back(4 * n - 2 + (ch - 'a'));
    } else {
      throw std::invalid_argument("bad block row spec: " + std::string(spec));
    }
  }
  std::sort(row.begin(), row.end());
  if (std::adjacent_find(row.begin(), row.end()) != row.end())
    throw std::invalid_argument("repeated entry in block row: " + std::string(spec));
  return row;
}

Tableau generator(Generator g, const RankParam& p) {
  std::vector<CompressedRow> rows;
  for (const char* r : spec_of(g).rows) rows.push_back(block_row(r, p));
  return Tableau::from_compressed(p, rows);
}

const std::vector<DisplayedLaw>& displayed_laws() {
  static const std::vector<DisplayedLaw> laws = {
      {"(Oade)(Obce)", "Oade", "Obce",
       {{+1, "Oace", "Obde"}, {-1, "Oabe", "Ocde"}, {+1, "Oabcde", "Oe"}}, {}},
      {"(Ead)(Ebc)", "Ead", "Ebc",
       {{+1, "Eac", "Ebd"}, {-1, "Eab", "Ecd"}, {+1, "Eabcd", "E"}}, {{+1, "Eac", "Ebd"}}},
      {"(Oe)(Eac)", "Oe", "Eac", {}, {{+1, "Oc", "Eae"}}},
      {"(Eae)(Ebd)", "Eae", "Ebd",
       {{+1, "Ead", "Ebe"}, {-1, "Eab", "Ede"}, {+1, "Eabde", "E"}}, {{+1, "Ead", "Ebe"}}},
      {"(Oace)(Obcd)", "Oace", "Obcd",
       {{+1, "Oacd", "Obce"}, {-1, "Oabc", "Ocde"}, {+1, "Oabcde", "Oc"}}, {}},
      {"(Oade)(Obcd)", "Oade", "Obcd",
       {{+1, "Oacd", "Obde"}, {-1, "Oabd", "Ocde"}, {+1, "Oabcde", "Od"}}, {}},
      {"(Eae)(Ebc)", "Eae", "Ebc",
       {{+1, "Eac", "Ebe"}, {-1, "Eab", "Ece"}, {+1, "Eabce", "E"}}, {{+1, "Eac", "Ebe"}}},
      {"(Od)(Eac)", "Od", "Eac", {}, {{+1, "Oc", "Ead"}}},
  };
  return laws;
}

namespace {

RowId block_id(const RowTable& rt, const std::string& spec) {
  return rt.id(expand(block_row(spec, rt.rank_param()), rt.rank_param()));
}

QPolynomial displayed_sum(const std::shared_ptr<const RowTable>& table,
                          const std::vector<DisplayedTerm>& terms) {
  QPolynomial out(table);
  for (const DisplayedTerm& t : terms)
    out.add({block_id(*table, t.first), block_id(*table, t.second)}, Rational(t.sign));
  return out;
}

}  // namespace

LawCheck check_displayed_law(const DisplayedLaw& law, Straightener& s) {
  const RowTable& rt = s.table();
  const CosetTuple v6 = schubert_point(6, rt.rank_param());
  LawCheck out;
  out.label = law.label;
  QPolynomial computed = s.straighten_pair(block_id(rt, law.lhs_first), block_id(rt, law.lhs_second));
  QPolynomial restricted = restrict_to_schubert(computed, v6);
  out.computed_full = computed.to_string();
  out.computed_restricted = restricted.to_string();
  if (!law.full.empty()) out.full_ok = computed == displayed_sum(s.table_ptr(), law.full);
  if (!law.restricted.empty())
    out.restricted_ok = restricted == displayed_sum(s.table_ptr(), law.restricted);
  return out;
}

namespace {

struct RelationSpec {
  std::string text;
  // (coefficient, generator factors)
  std::vector<std::pair<int, std::vector<Generator>>> terms;
  std::vector<std::string> laws;
};

RelationSpec relation_spec(const std::string& lemma, int case_id) {
  using G = Generator;
  if (lemma == "lemma52") {
    switch (case_id) {
      case 1:
        return {"X2X3-X1X4+Y1-Y3",
                {{1, {G::X2, G::X3}}, {-1, {G::X1, G::X4}}, {1, {G::Y1}}, {-1, {G::Y3}}},
                {"(Oade)(Obce)", "(Ead)(Ebc)", "(Oe)(Eac)", "(Eae)(Ebd)"}};
      case 2:
        return {"X4X5-X3X6+Y4-Y3",
                {{1, {G::X4, G::X5}}, {-1, {G::X3, G::X6}}, {1, {G::Y4}}, {-1, {G::Y3}}},
                {"(Oace)(Obcd)", "(Eae)(Ebd)"}};
      case 3:
        return {"X2X5-X1X6+Y2-Y3",
                {{1, {G::X2, G::X5}}, {-1, {G::X1, G::X6}}, {1, {G::Y2}}, {-1, {G::Y3}}},
                {"(Oade)(Obcd)", "(Eae)(Ebc)", "(Od)(Eac)"}};
      default: break;
    }
  } else if (lemma == "lemma53") {
    switch (case_id) {
      case 1: return {"Z1-X2Y4", {{1, {G::Z1}}, {-1, {G::X2, G::Y4}}}, {"(Ead)(Ebc)"}};
      case 2: return {"Z2-X2Y3", {{1, {G::Z2}}, {-1, {G::X2, G::Y3}}}, {"(Ead)(Ebc)"}};
      default: break;
    }
  }
  throw std::invalid_argument("no relation " + lemma + " case " + std::to_string(case_id));
}

// P(B) of the generic skew matrix, memoized per mask.
class SymbolicPfaffians {
 public:
  explicit SymbolicPfaffians(int size) : size_(size) {}
  const SparsePolynomial& operator()(std::uint32_t mask) {
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    IndexSet s;
    for (int i = 0; i < size_; ++i)
      if (mask >> i & 1U) s.push_back(i + 1);
    return memo_.emplace(mask, symbolic_sub_pfaffian(size_, s)).first->second;
  }

 private:
  int size_;
  std::unordered_map<std::uint32_t, SparsePolynomial> memo_;
};

RelationReport verify_relation(const std::string& lemma, int case_id, const RankParam& p,
                               const RelationOptions& options) {
  const RelationSpec spec = relation_spec(lemma, case_id);
  auto table = std::make_shared<const RowTable>(p);
  Straightener s(table);
  const CosetTuple v6 = schubert_point(6, p);

  RelationReport report;
  report.lemma = lemma;
  report.case_id = case_id;
  report.n = p.n();
  report.relation = spec.text;

  QPolynomial relation(table);
  for (const auto& [coeff, factors] : spec.terms) {
    Tableau t(p, {});
    for (Generator g : factors) t = t * generator(g, p);
    relation += QPolynomial::from_tableau(table, t, Rational(coeff));
  }

  NormalFormOptions first;
  first.max_steps = options.max_steps;
  QPolynomial full = s.normal_form(relation, first);
  std::vector<QMonomial> dropped;
  QPolynomial restricted = restrict_to_schubert(full, v6, dropped);
  report.remainder = restricted.is_zero() ? "" : restricted.to_string();
  for (const QMonomial& m : dropped) {
    report.dropped_monomials.push_back(monomial_to_string(*table, m));
    const bool has_outside = std::any_of(m.begin(), m.end(),
                                         [&](RowId r) { return !bruhat_leq(table->row(r), v6); });
    report.dropped_ok = report.dropped_ok && has_outside;
  }

  NormalFormOptions last;
  last.strategy = NormalFormOptions::Strategy::kLastPair;
  last.max_steps = options.max_steps;
  QPolynomial full_last = s.normal_form(relation, last);
  report.path_independent = restrict_to_schubert(full_last, v6) == restricted;

  // Functional checks on the big cell: each law used, and the whole rewrite.
  const SeededRng base = SeededRng(options.seed).split(lemma == "lemma52" ? 52 : 53).split(
      static_cast<std::uint64_t>(case_id));
  for (int k = 0; k < options.random_matrices; ++k) {
    SeededRng rng = base.split(static_cast<std::uint64_t>(k));
    PfaffianTable pf(random_skew(p.rank(), rng));
    ++report.residual_checks;
    if (relation.evaluate(pf) != full.evaluate(pf)) ++report.residual_failures;
    for (const auto& [x, y] : s.used_pairs()) {
      Rational rhs = 0;
      for (const PairTerm& t : s.law(x, y))
        rhs += t.coefficient * pf(table->b_mask(t.a)) * pf(table->b_mask(t.b));
      ++report.residual_checks;
      if (pf(table->b_mask(x)) * pf(table->b_mask(y)) != rhs) ++report.residual_failures;
    }
  }

  if (options.symbolic && p.n() == 1) {
    SymbolicPfaffians sym(p.rank());
    for (const auto& [x, y] : s.used_pairs()) {
      SparsePolynomial diff = sym(table->b_mask(x)) * sym(table->b_mask(y));
      for (const PairTerm& t : s.law(x, y))
        diff -= (sym(table->b_mask(t.a)) * sym(table->b_mask(t.b))) * t.coefficient;
      ++report.symbolic_laws;
      if (!diff.is_zero()) ++report.symbolic_failures;
    }
  }

  bool laws_ok = true;
  for (const std::string& label : spec.laws) {
    for (const DisplayedLaw& law : displayed_laws()) {
      if (law.label != label) continue;
      LawCheck check = check_displayed_law(law, s);
      laws_ok = laws_ok && check.full_ok && check.restricted_ok;
      report.displayed.push_back(std::move(check));
    }
  }

  report.pass = restricted.is_zero() && report.dropped_ok && report.path_independent &&
                report.residual_failures == 0 && report.symbolic_failures == 0 && laws_ok;
  return report;
}

}  // namespace

RelationReport verify_lemma52(int case_id, const RankParam& p, const RelationOptions& options) {
  return verify_relation("lemma52", case_id, p, options);
}

RelationReport verify_lemma53(int case_id, const RankParam& p, const RelationOptions& options) {
  return verify_relation("lemma53", case_id, p, options);
}

}  // namespace spinquot
