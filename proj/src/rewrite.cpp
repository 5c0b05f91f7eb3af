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

#include "spinquot/rewrite.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

namespace spinquot::rewrite {

int degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool order_greater(const Monomial& a, const Monomial& b) {
  const int da = degree(a);
  const int db = degree(b);
  if (da != db) return da > db;
  return a > b;  // earlier variables weigh more
}

namespace {

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

// Splits "abc12" into ("abc", 12) for natural ordering; -1 if no suffix.
std::pair<std::string, long> natural_key(const std::string& name) {
  std::size_t cut = name.size();
  while (cut > 0 && std::isdigit(static_cast<unsigned char>(name[cut - 1]))) --cut;
  if (cut == name.size()) return {name, -1};
  return {name.substr(0, cut), std::stol(name.substr(cut))};
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Tokens of a monomial: names optionally followed by ^exponent, separated by
// whitespace or '*'.
std::vector<std::pair<std::string, int>> monomial_tokens(const std::string& text) {
  std::string spaced;
  for (char c : text) spaced.push_back(c == '*' ? ' ' : c);
  std::istringstream in(spaced);
  std::vector<std::pair<std::string, int>> out;
  std::string tok;
  while (in >> tok) {
    int exp = 1;
    if (const auto caret = tok.find('^'); caret != std::string::npos) {
      const std::string e = tok.substr(caret + 1);
      if (e.empty() || !std::all_of(e.begin(), e.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw RewriteError("bad exponent in '" + tok + "'");
      exp = std::stoi(e);
      tok = tok.substr(0, caret);
    }
    if (tok.empty()) throw RewriteError("empty variable name in '" + text + "'");
    if (tok == "1") continue;
    out.emplace_back(tok, exp);
  }
  return out;
}

}  // namespace

ReductionSystem::ReductionSystem(std::vector<std::string> variables, std::vector<Rule> rules)
    : variables_(std::move(variables)) {
  std::set<std::string> seen;
  for (const auto& v : variables_)
    if (!seen.insert(v).second) throw RewriteError("duplicate variable " + v);
  for (const Rule& r : rules) {
    if (r.lhs.size() != variables_.size() || r.rhs.size() != variables_.size())
      throw RewriteError("rule does not match the variable count");
    if (degree(r.lhs) != 2) throw RewriteError("rule lhs must have degree 2");
    if (r.lhs == r.rhs) throw RewriteError("rule lhs equals rhs");
    if (!order_greater(r.lhs, r.rhs))
      throw RewriteError("rule " + to_string(r.lhs) + " -> " + to_string(r.rhs) + " does not decrease the order");
  }
  // Drop rules whose lhs is divisible by another (earlier, on ties) lhs.
  for (std::size_t i = 0; i < rules.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < rules.size() && !redundant; ++j) {
      if (i == j || !divides(rules[j].lhs, rules[i].lhs)) continue;
      redundant = rules[j].lhs != rules[i].lhs || j < i;
    }
    if (!redundant) rules_.push_back(rules[i]);
  }
  // Replace reducible right-hand sides by their normal forms.
  for (Rule& r : rules_) r.rhs = normal_form(r.rhs, *this);
  for (const Rule& r : rules_)
    if (r.lhs == r.rhs) throw RewriteError("rule collapses after inter-reduction");
}

std::size_t ReductionSystem::variable_index(const std::string& name) const {
  const auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) throw RewriteError("unknown variable " + name);
  return static_cast<std::size_t>(it - variables_.begin());
}

Monomial ReductionSystem::parse_monomial(const std::string& text) const {
  Monomial m(variables_.size(), 0);
  for (const auto& [name, exp] : monomial_tokens(text)) m[variable_index(name)] += exp;
  return m;
}

std::string ReductionSystem::to_string(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += variables_[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::optional<std::size_t> ReductionSystem::first_applicable(const Monomial& m) const {
  for (std::size_t i = 0; i < rules_.size(); ++i)
    if (divides(rules_[i].lhs, m)) return i;
  return std::nullopt;
}

Monomial ReductionSystem::apply(const Monomial& m, std::size_t index) const {
  const Rule& r = rules_.at(index);
  if (!divides(r.lhs, m)) throw RewriteError("rule does not apply");
  Monomial out = m;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += r.rhs[i] - r.lhs[i];
  return out;
}

Monomial normal_form(const Monomial& m, const ReductionSystem& s, std::size_t max_steps) {
  Monomial cur = m;
  for (std::size_t step = 0; step < max_steps; ++step) {
    const auto rule = s.first_applicable(cur);
    if (!rule) return cur;
    cur = s.apply(cur, *rule);
  }
  throw RewriteError("normal form of " + s.to_string(m) + " exceeded the step cap");
}

Polynomial normal_form(const Polynomial& f, const ReductionSystem& s, std::size_t max_steps) {
  Polynomial out;
  for (const auto& [m, c] : f) {
    Rational& slot = out[normal_form(m, s, max_steps)];
    slot += c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::vector<Monomial> all_normal_forms(const Monomial& m, const ReductionSystem& s) {
  // Every step strictly decreases a well-order on a finite set of monomials
  // of fixed degree, so the search terminates.
  std::map<Monomial, std::set<Monomial>> memo;
  std::function<const std::set<Monomial>&(const Monomial&)> visit =
      [&](const Monomial& cur) -> const std::set<Monomial>& {
    if (auto it = memo.find(cur); it != memo.end()) return it->second;
    std::set<Monomial> out;
    bool reducible = false;
    for (std::size_t i = 0; i < s.rules().size(); ++i) {
      if (!divides(s.rules()[i].lhs, cur)) continue;
      reducible = true;
      const auto& sub = visit(s.apply(cur, i));
      out.insert(sub.begin(), sub.end());
    }
    if (!reducible) out.insert(cur);
    return memo.emplace(cur, std::move(out)).first->second;
  };
  const auto& forms = visit(m);
  return {forms.begin(), forms.end()};
}

std::vector<Monomial> overlaps(const ReductionSystem& s) {
  std::set<Monomial> found;
  const auto& rules = s.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = i + 1; j < rules.size(); ++j) {
      Monomial l = lcm(rules[i].lhs, rules[j].lhs);
      if (degree(l) == 3) found.insert(std::move(l));
    }
    for (std::size_t v = 0; v < s.variable_count(); ++v) {
      if (rules[i].lhs[v] == 0) continue;
      Monomial l = rules[i].lhs;
      ++l[v];
      found.insert(std::move(l));
    }
  }
  std::vector<Monomial> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), order_greater);
  return out;
}

AmbiguityResult resolve(const Monomial& m, const ReductionSystem& s) {
  AmbiguityResult result;
  result.monomial = m;
  std::set<Monomial> all;
  for (std::size_t i = 0; i < s.rules().size(); ++i) {
    if (!divides(s.rules()[i].lhs, m)) continue;
    Branch b{i, s.apply(m, i), {}};
    b.normal_forms = all_normal_forms(b.after_first_step, s);
    all.insert(b.normal_forms.begin(), b.normal_forms.end());
    result.branches.push_back(std::move(b));
  }
  if (result.branches.empty()) all.insert(m);
  result.resolved = all.size() == 1;
  result.normal_form = normal_form(m, s);
  return result;
}

DiamondReport check_diamond(const ReductionSystem& s) {
  DiamondReport report;
  report.confluent = true;
  for (const Monomial& m : overlaps(s)) {
    AmbiguityResult r = resolve(m, s);
    if (!r.resolved && report.confluent) {
      report.confluent = false;
      std::set<Monomial> forms;
      for (const Branch& b : r.branches) forms.insert(b.normal_forms.begin(), b.normal_forms.end());
      report.divergence = std::make_pair(*forms.begin(), *std::next(forms.begin()));
    }
    report.ambiguities.push_back(std::move(r));
  }
  return report;
}

namespace {

void for_each_monomial(std::size_t vars, int k, const std::function<void(const Monomial&)>& f) {
  Monomial m(vars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == vars) {
      m[i] = left;
      f(m);
      m[i] = 0;
      return;
    }
    for (int e = left; e >= 0; --e) {
      m[i] = e;
      rec(i + 1, left - e);
    }
    m[i] = 0;
  };
  if (vars == 0) {
    if (k == 0) f(m);
    return;
  }
  rec(0, k);
}

}  // namespace

std::uint64_t hilbert_count(const ReductionSystem& s, int k) {
  if (k < 0) throw std::invalid_argument("degree must be non-negative");
  if (!check_diamond(s).confluent) throw RewriteError("hilbert_count needs a confluent system");
  std::uint64_t count = 0;
  for_each_monomial(s.variable_count(), k, [&](const Monomial& m) {
    if (!s.first_applicable(m)) ++count;
  });
  return count;
}

std::uint64_t veronese_dim(int d, int k) {
  if (d < 1 || k < 0) throw std::invalid_argument("veronese_dim needs d >= 1 and k >= 0");
  const std::uint64_t n = static_cast<std::uint64_t>(d + 2 * k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= static_cast<std::uint64_t>(d); ++i) r = r * (n - static_cast<std::uint64_t>(d) + i) / i;
  return r;
}

SymMinorIdeal::SymMinorIdeal(std::vector<std::vector<std::string>> matrix) : matrix_(std::move(matrix)) {
  const std::size_t n = matrix_.size();
  if (n < 2) throw std::invalid_argument("matrix must be at least 2x2");
  std::set<std::string> off_diagonal;
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix_[i].size() != n) throw std::invalid_argument("matrix must be square");
    for (std::size_t j = 0; j < n; ++j) {
      if (matrix_[i][j] != matrix_[j][i]) throw std::invalid_argument("matrix must be symmetric");
      if (i < j && !off_diagonal.insert(matrix_[i][j]).second)
        throw std::invalid_argument("off-diagonal variables must be distinct");
    }
  }
}

std::vector<Polynomial> SymMinorIdeal::minors(const ReductionSystem& s) const {
  const std::size_t n = matrix_.size();
  std::vector<Polynomial> out;
  auto var = [&](std::size_t i, std::size_t j) {
    Monomial m(s.variable_count(), 0);
    ++m[s.variable_index(matrix_[i][j])];
    return m;
  };
  auto times = [](Monomial a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) {
          Polynomial p;
          p[times(var(i, k), var(j, l))] += 1;
          p[times(var(i, l), var(j, k))] -= 1;
          std::erase_if(p, [](const auto& kv) { return kv.second == 0; });
          if (!p.empty() && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
        }
  return out;
}

VeroneseReport verify_veronese_equality(const ReductionSystem& s, const SymMinorIdeal& m, int kmax) {
  VeroneseReport report;
  const std::vector<Polynomial> minors = m.minors(s);
  for (std::size_t r = 0; r < s.rules().size(); ++r) {
    Polynomial diff;
    diff[s.rules()[r].lhs] += 1;
    diff[s.rules()[r].rhs] -= 1;
    Polynomial neg = diff;
    for (auto& [mono, c] : neg) c = -c;
    const bool found = std::any_of(minors.begin(), minors.end(),
                                   [&](const Polynomial& p) { return p == diff || p == neg; });
    if (!found) report.rules_not_minors.push_back(r);
  }
  report.rules_are_minors = report.rules_not_minors.empty();
  for (std::size_t i = 0; i < minors.size(); ++i)
    if (!normal_form(minors[i], s).empty()) report.minors_not_reduced.push_back(i);
  report.minors_reduce_to_zero = report.minors_not_reduced.empty();
  report.hilbert_agrees = true;
  for (int k = 0; k <= kmax; ++k) {
    const std::uint64_t h = hilbert_count(s, k);
    const std::uint64_t v = veronese_dim(m.d(), k);
    report.hilbert.emplace_back(k, h, v);
    report.hilbert_agrees = report.hilbert_agrees && h == v;
  }
  return report;
}

Builtin parse_builtin(const std::string& text) {
  std::string t;
  for (char c : text) t.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (t == "P1") return Builtin::P1;
  if (t == "P2") return Builtin::P2;
  if (t == "P3") return Builtin::P3;
  throw std::invalid_argument("system must be one of P1, P2, P3");
}

std::string to_string(Builtin b) {
  switch (b) {
    case Builtin::P1: return "P1";
    case Builtin::P2: return "P2";
    case Builtin::P3: return "P3";
  }
  return "?";
}

namespace {

constexpr const char* kP1 = R"(variables: z0 z1 z2
z0 z2 -> z1^2
)";

constexpr const char* kP2 = R"(variables: z1 z2 z3 z4 z5 z6
z1 z2 -> z4^2
z1 z3 -> z5^2
z2 z3 -> z6^2
z1 z6 -> z4 z5
z2 z5 -> z4 z6
z3 z4 -> z5 z6
)";

constexpr const char* kP3 = R"(variables: z1 z2 z3 z4 z5 z6 z7 z8 z9 z10
z1 z2 -> z5^2
z1 z3 -> z6^2
z1 z4 -> z7^2
z1 z8 -> z5 z6
z1 z9 -> z5 z7
z1 z10 -> z6 z7
z2 z3 -> z8^2
z2 z4 -> z9^2
z2 z6 -> z5 z8
z2 z7 -> z5 z9
z2 z10 -> z8 z9
z3 z4 -> z10^2
z3 z5 -> z6 z8
z3 z7 -> z6 z10
z3 z9 -> z8 z10
z4 z5 -> z7 z9
z4 z6 -> z7 z10
z4 z8 -> z9 z10
z5 z10 -> z6 z9
z6 z9 -> z7 z8
)";

}  // namespace

ReductionSystem builtin_system(Builtin b) {
  switch (b) {
    case Builtin::P1: return parse_system(kP1);
    case Builtin::P2: return parse_system(kP2);
    case Builtin::P3: return parse_system(kP3);
  }
  throw std::invalid_argument("unknown builtin");
}

SymMinorIdeal builtin_matrix(Builtin b) {
  switch (b) {
    case Builtin::P1: return SymMinorIdeal({{"z0", "z1"}, {"z1", "z2"}});
    case Builtin::P2:
      return SymMinorIdeal({{"z1", "z4", "z5"}, {"z4", "z2", "z6"}, {"z5", "z6", "z3"}});
    case Builtin::P3:
      return SymMinorIdeal({{"z1", "z5", "z6", "z7"},
                            {"z5", "z2", "z8", "z9"},
                            {"z6", "z8", "z3", "z10"},
                            {"z7", "z9", "z10", "z4"}});
  }
  throw std::invalid_argument("unknown builtin");
}

std::vector<Monomial> listed_ambiguities(Builtin b) {
  const ReductionSystem s = builtin_system(b);
  std::vector<std::string> texts;
  switch (b) {
    case Builtin::P1: texts = {"z0 z1 z2"}; break;
    case Builtin::P2: texts = {"z1 z2 z3", "z1 z2 z5", "z1 z2 z6", "z1 z3 z4", "z1 z3 z6", "z2 z3 z4", "z2 z3 z5"}; break;
    case Builtin::P3: texts = {"z1 z2 z3"}; break;
  }
  std::vector<Monomial> out;
  for (const auto& t : texts) out.push_back(s.parse_monomial(t));
  return out;
}

ReductionSystem parse_system(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> variables;
  bool declared = false;
  std::vector<std::pair<std::string, std::string>> raw;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.rfind("variables:", 0) == 0) {
      if (declared) throw RewriteError("variables declared twice");
      std::istringstream vs(line.substr(10));
      std::string v;
      while (vs >> v) variables.push_back(v);
      declared = true;
      continue;
    }
    const auto arrow = line.find("->");
    if (arrow == std::string::npos)
      throw RewriteError("line " + std::to_string(line_no) + ": expected 'LHS -> RHS'");
    raw.emplace_back(line.substr(0, arrow), line.substr(arrow + 2));
  }
  if (!declared) {
    std::set<std::string> names;
    for (const auto& [l, r] : raw) {
      for (const auto& [name, e] : monomial_tokens(l)) names.insert(name);
      for (const auto& [name, e] : monomial_tokens(r)) names.insert(name);
    }
    variables.assign(names.begin(), names.end());
    std::sort(variables.begin(), variables.end(),
              [](const std::string& a, const std::string& b) { return natural_key(a) < natural_key(b); });
  }
  // Parse monomials against an empty-rule system with the final variable list.
  const ReductionSystem vars(variables, {});
  std::vector<Rule> rules;
  for (const auto& [l, r] : raw) rules.push_back({vars.parse_monomial(l), vars.parse_monomial(r)});
  return ReductionSystem(std::move(variables), std::move(rules));
}

}  // namespace spinquot::rewrite
