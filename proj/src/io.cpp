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

#include "spinquot/io.hpp"

#include <sstream>
#include <stdexcept>

namespace spinquot::io {

CosetTuple parse_tuple(const std::string& text) {
  std::string cleaned;
  for (char c : text) cleaned.push_back(c == ',' || c == '(' || c == ')' ? ' ' : c);
  std::istringstream in(cleaned);
  std::vector<int> entries;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad tuple entry '" + tok + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("bad tuple entry '" + tok + "'");
    entries.push_back(value);
  }
  if (entries.empty()) throw std::invalid_argument("empty tuple");
  return CosetTuple(std::move(entries));
}

Json to_json(const CosetTuple& t) { return Json(std::vector<int>(t.entries().begin(), t.entries().end())); }

CosetTuple tuple_from_json(const Json& j) { return CosetTuple(j.get<std::vector<int>>()); }

Json to_json(const Tableau& t) {
  Json rows = Json::array();
  Json compressed = Json::array();
  for (const CosetTuple& r : t.rows()) {
    rows.push_back(to_json(r));
    compressed.push_back(compress(r, t.rank_param()));
  }
  return Json{{"rows", rows}, {"compressed", compressed}};
}

Tableau tableau_from_json(const Json& j, const RankParam& p) {
  if (j.is_array()) return Tableau::from_compressed(p, j.get<std::vector<CompressedRow>>());
  if (j.contains("compressed")) return Tableau::from_compressed(p, j.at("compressed").get<std::vector<CompressedRow>>());
  std::vector<CosetTuple> rows;
  for (const Json& r : j.at("rows")) rows.push_back(tuple_from_json(r));
  return Tableau(p, std::move(rows));
}

Json to_json(const SkewMatrix& a) {
  Json out = Json::array();
  for (int i = 1; i <= a.size(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= a.size(); ++j) row.push_back(format_rational(a.entry(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

SkewMatrix matrix_from_json(const Json& j) {
  RationalMatrix m;
  for (const Json& row : j) {
    std::vector<Rational> r;
    for (const Json& e : row) r.push_back(e.is_string() ? parse_rational(e.get<std::string>()) : Rational(e.get<long>()));
    m.push_back(std::move(r));
  }
  return SkewMatrix(m);
}

Json to_json(const GradedDims& d) {
  return Json{{"v", to_json(d.v)}, {"grading", "4lambda"}, {"dims", d.dims}};
}

std::string hilbert_csv(const GradedDims& d) {
  std::string out = "k,dim\n";
  for (std::size_t k = 0; k < d.dims.size(); ++k) out += std::to_string(k) + "," + std::to_string(d.dims[k]) + "\n";
  return out;
}

Json to_json(const Prop11Report& r) {
  Json rows = Json::array();
  for (const Prop11Row& row : r.rows) rows.push_back({{"k", row.k}, {"dim", row.dim}, {"expected", row.expected}});
  Json out{{"case", to_string(r.which)}, {"n", r.n}, {"v", to_json(r.v)}, {"pass", r.pass}, {"rows", rows}};
  if (r.first_failure) out["first_failure"] = *r.first_failure;
  return out;
}

Json to_json(const Lemma51Report& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    Json blocks = Json::array();
    for (Generator g : w.blocks) blocks.push_back(generator_name(g));
    witnesses.push_back({{"tableau", to_json(w.tableau)["compressed"]}, {"blocks", blocks}});
  }
  Json failures = Json::array();
  for (const Tableau& t : r.failures) failures.push_back(to_json(t)["compressed"]);
  return Json{{"n", r.n},
              {"kmax", r.kmax},
              {"pass", r.pass},
              {"checked_per_degree", r.checked},
              {"failures", failures},
              {"witnesses", witnesses}};
}

Json to_json(const Thm51Report& r) {
  Json rows = Json::array();
  for (const Thm51Row& row : r.rows)
    rows.push_back({{"k", row.k}, {"dim", row.dim}, {"rank", row.rank}, {"products", row.products}});
  return Json{{"n", r.n}, {"kmax", r.kmax}, {"pass", r.pass}, {"rows", rows}};
}

Json to_json(const RelationReport& r) {
  Json laws = Json::array();
  for (const LawCheck& c : r.displayed) {
    Json law{{"label", c.label}, {"full_ok", c.full_ok}, {"restricted_ok", c.restricted_ok}};
    if (!c.computed_full.empty()) law["computed_full"] = c.computed_full;
    if (!c.computed_restricted.empty()) law["computed_restricted"] = c.computed_restricted;
    laws.push_back(std::move(law));
  }
  return Json{{"lemma", r.lemma},
              {"case", r.case_id},
              {"n", r.n},
              {"pass", r.pass},
              {"relation", r.relation},
              {"remainder", r.remainder},
              {"dropped_monomials", r.dropped_monomials.size()},
              {"dropped_ok", r.dropped_ok},
              {"path_independent", r.path_independent},
              {"residual_checks", r.residual_checks},
              {"residual_failures", r.residual_failures},
              {"symbolic_laws", r.symbolic_laws},
              {"symbolic_failures", r.symbolic_failures},
              {"displayed_laws", laws}};
}

Json to_json(const Thm23Report& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"matrix", f.matrix}, {"i1", f.i1}, {"i2", f.i2}, {"residual", format_rational(f.residual)}});
  return Json{{"n", r.n},
              {"seed", r.seed},
              {"matrices", r.matrices},
              {"checks", r.checks},
              {"pass", r.pass()},
              {"failures", failures}};
}

Json to_json(const rewrite::DiamondReport& r, const rewrite::ReductionSystem& s) {
  Json ambiguities = Json::array();
  for (const auto& a : r.ambiguities) {
    Json branches = Json::array();
    for (const auto& b : a.branches) {
      Json forms = Json::array();
      for (const auto& m : b.normal_forms) forms.push_back(s.to_string(m));
      const auto& rule = s.rules()[b.rule];
      branches.push_back({{"rule", s.to_string(rule.lhs) + " -> " + s.to_string(rule.rhs)},
                          {"first_step", s.to_string(b.after_first_step)},
                          {"normal_forms", forms}});
    }
    ambiguities.push_back({{"monomial", s.to_string(a.monomial)},
                           {"resolved", a.resolved},
                           {"normal_form", s.to_string(a.normal_form)},
                           {"branches", branches}});
  }
  Json out{{"confluent", r.confluent}, {"ambiguities", ambiguities}};
  if (r.divergence) out["divergence"] = {s.to_string(r.divergence->first), s.to_string(r.divergence->second)};
  return out;
}

Json to_json(const rewrite::VeroneseReport& r) {
  Json hilbert = Json::array();
  for (const auto& [k, h, v] : r.hilbert) hilbert.push_back({{"k", k}, {"hilbert_count", h}, {"veronese_dim", v}});
  return Json{{"pass", r.pass()},
              {"rules_are_minors", r.rules_are_minors},
              {"minors_reduce_to_zero", r.minors_reduce_to_zero},
              {"hilbert_agrees", r.hilbert_agrees},
              {"rules_not_minors", r.rules_not_minors},
              {"minors_not_reduced", r.minors_not_reduced},
              {"hilbert", hilbert}};
}

Json to_json(const rewrite::ReductionSystem& s) {
  Json rules = Json::array();
  for (const auto& r : s.rules()) rules.push_back(s.to_string(r.lhs) + " -> " + s.to_string(r.rhs));
  return Json{{"variables", s.variables()}, {"rules", rules}};
}

}  // namespace spinquot::io
