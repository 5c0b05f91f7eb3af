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

#include "spinquot/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spinquot/io.hpp"
#include "spinquot/pfaffian.hpp"
#include "spinquot/rewrite.hpp"
#include "spinquot/ringcheck.hpp"
#include "spinquot/straighten.hpp"
#include "spinquot/weyl.hpp"

namespace spinquot::cli {

namespace {

using io::Json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int n = 1;
  int kmax = 3;
  std::string v = "v6";
  std::string case_id;
  std::uint64_t seed = 0;
  std::string format = "json";
  bool guard_override = false;
  bool timing = false;
  std::vector<std::string> args;

  [[nodiscard]] Limits limits() const { return guard_override ? Limits::unlimited() : Limits{}; }
};

struct Outcome {
  std::string command;
  Json inputs;
  bool pass = true;
  Json details;
  std::string text;
};

/// "v1".."v6" or an explicit tuple; must be a W^P element.
CosetTuple resolve_selector(const std::string& selector, const RankParam& p) {
  if (selector.size() == 2 && (selector[0] == 'v' || selector[0] == 'V') && selector[1] >= '1' && selector[1] <= '6')
    return schubert_point(selector[1] - '0', p);
  CosetTuple t;
  try {
    t = io::parse_tuple(selector);
  } catch (const std::invalid_argument& e) {
    throw UsageError("selector '" + selector + "': " + e.what());
  }
  if (!t.is_wp_member(p)) throw UsageError("selector " + t.to_string() + " is not in W^P for n=" + std::to_string(p.n()));
  return t;
}

std::string pass_word(bool pass) { return pass ? "PASS" : "FAIL"; }

Json base_inputs(const RunConfig& cfg) { return Json{{"n", cfg.n}}; }

// --- weyl -----------------------------------------------------------------

Outcome cmd_weyl(const std::string& sub, const RunConfig& cfg) {
  const RankParam p(cfg.n);
  Outcome o;
  o.command = "weyl " + sub;
  o.inputs = base_inputs(cfg);
  if (sub == "one-line" || sub == "coset") {
    if (cfg.args.size() != 1) throw UsageError(o.command + " takes one selector");
    const std::string& sel = cfg.args[0];
    o.inputs["selector"] = sel;
    if (sel.size() == 2 && (sel[0] == 'v' || sel[0] == 'V') && sel[1] >= '1' && sel[1] <= '6') {
      const std::vector<int> word = schubert_word(sel[1] - '0', p);
      const WeylElement w = word_to_element(word, p);
      std::vector<int> one_line;
      for (int j = 1; j <= p.ambient(); ++j) one_line.push_back(w(j));
      const CosetTuple c = coset_rep(w);
      o.details = Json{{"word", word}, {"one_line", one_line}, {"coset", io::to_json(c)}};
      std::string line;
      for (int x : one_line) line += (line.empty() ? "(" : ",") + std::to_string(x);
      o.text = sub == "coset" ? c.to_string() : line + ")";
    } else {
      const CosetTuple c = resolve_selector(sel, p);
      o.details = Json{{"coset", io::to_json(c)}};
      o.text = c.to_string();
    }
  } else if (sub == "bruhat") {
    if (cfg.args.size() != 2) throw UsageError("weyl bruhat takes two selectors");
    const CosetTuple a = resolve_selector(cfg.args[0], p);
    const CosetTuple b = resolve_selector(cfg.args[1], p);
    const bool leq = bruhat_leq(a, b);
    o.inputs["x"] = io::to_json(a);
    o.inputs["y"] = io::to_json(b);
    o.details = Json{{"leq", leq}};
    o.text = leq ? "true" : "false";
  } else if (sub == "enumerate") {
    const std::vector<CosetTuple> all = enumerate_wp(p, cfg.limits());
    Json list = Json::array();
    std::string text;
    for (const CosetTuple& t : all) {
      list.push_back(io::to_json(t));
      text += t.to_string() + "\n";
    }
    o.details = Json{{"count", all.size()}, {"tuples", list}};
    o.text = std::to_string(all.size()) + " tuples\n" + text;
  } else if (sub == "minimal") {
    const CosetTuple m = minimal_semistable(p, cfg.limits());
    o.details = Json{{"minimal", io::to_json(m)}, {"equals_v1", m == schubert_point(1, p)}};
    o.text = m.to_string();
  } else {
    throw UsageError("unknown weyl command " + sub);
  }
  return o;
}

// --- verify ---------------------------------------------------------------

std::vector<int> relation_cases(const std::string& case_id, int count) {
  if (case_id.empty()) {
    std::vector<int> all;
    for (int c = 1; c <= count; ++c) all.push_back(c);
    return all;
  }
  const std::map<std::string, int> roman = {{"i", 1}, {"ii", 2}, {"iii", 3}, {"1", 1}, {"2", 2}, {"3", 3}};
  const auto it = roman.find(case_id);
  if (it == roman.end() || it->second > count)
    throw UsageError("case must be 1.." + std::to_string(count) + " (or i, ii, iii)");
  return {it->second};
}

Outcome verify_relations(const std::string& target, const RunConfig& cfg) {
  const RankParam p(cfg.n);
  if (p.n() > cfg.limits().max_n) throw GuardExceeded("n exceeds the guard; use --guard-override");
  const bool l52 = target == "lemma52";
  Outcome o;
  o.inputs = base_inputs(cfg);
  o.inputs["seed"] = cfg.seed;
  RelationOptions options;
  options.seed = cfg.seed;
  Json reports = Json::array();
  for (int c : relation_cases(cfg.case_id, l52 ? 3 : 2)) {
    const RelationReport r = l52 ? verify_lemma52(c, p, options) : verify_lemma53(c, p, options);
    o.pass = o.pass && r.pass;
    reports.push_back(io::to_json(r));
    o.text += target + " case " + std::to_string(c) + ": " + pass_word(r.pass) + "  " + r.relation + "\n";
  }
  o.details = Json{{"cases", reports}};
  return o;
}

Outcome verify_prop11(const RunConfig& cfg) {
  const RankParam p(cfg.n);
  Outcome o;
  o.inputs = base_inputs(cfg);
  o.inputs["kmax"] = cfg.kmax;
  std::vector<Prop11Case> cases;
  if (cfg.case_id.empty()) {
    cases = {Prop11Case::I, Prop11Case::II, Prop11Case::III, Prop11Case::IV, Prop11Case::V};
  } else {
    try {
      cases = {parse_prop11_case(cfg.case_id)};
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  Json reports = Json::array();
  for (Prop11Case c : cases) {
    const Prop11Report r = spinquot::verify_prop11(c, p, cfg.kmax, cfg.limits());
    o.pass = o.pass && r.pass;
    reports.push_back(io::to_json(r));
    std::string dims;
    for (const auto& row : r.rows) dims += (dims.empty() ? "" : ",") + std::to_string(row.dim);
    o.text += "prop11 case " + to_string(c) + ": " + pass_word(r.pass) + "  dims " + dims + "\n";
  }
  o.details = Json{{"cases", reports}};
  return o;
}

std::vector<rewrite::Builtin> builtin_cases(const std::string& case_id) {
  if (case_id.empty()) return {rewrite::Builtin::P1, rewrite::Builtin::P2, rewrite::Builtin::P3};
  try {
    return {rewrite::parse_builtin(case_id)};
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Outcome verify_diamond(const RunConfig& cfg) {
  Outcome o;
  o.inputs = Json::object();
  Json reports = Json::array();
  for (rewrite::Builtin b : builtin_cases(cfg.case_id)) {
    const rewrite::ReductionSystem s = rewrite::builtin_system(b);
    const rewrite::DiamondReport d = rewrite::check_diamond(s);
    Json listed = Json::array();
    bool listed_ok = true;
    for (const auto& m : rewrite::listed_ambiguities(b)) {
      const rewrite::AmbiguityResult r = rewrite::resolve(m, s);
      listed_ok = listed_ok && r.resolved;
      listed.push_back({{"monomial", s.to_string(m)}, {"resolved", r.resolved}, {"normal_form", s.to_string(r.normal_form)}});
    }
    const bool pass = d.confluent && listed_ok;
    o.pass = o.pass && pass;
    Json report = io::to_json(d, s);
    report["system"] = to_string(b);
    report["rules"] = io::to_json(s)["rules"];
    report["listed_ambiguities"] = listed;
    reports.push_back(std::move(report));
    o.text += "diamond " + to_string(b) + ": " + pass_word(pass) + "  " + std::to_string(d.ambiguities.size()) +
              " ambiguities\n";
  }
  o.details = Json{{"systems", reports}};
  return o;
}

Outcome verify_veronese(const RunConfig& cfg) {
  Outcome o;
  o.inputs = Json{{"kmax", cfg.kmax}};
  Json reports = Json::array();
  for (rewrite::Builtin b : builtin_cases(cfg.case_id)) {
    const rewrite::VeroneseReport r =
        rewrite::verify_veronese_equality(rewrite::builtin_system(b), rewrite::builtin_matrix(b), cfg.kmax);
    o.pass = o.pass && r.pass();
    Json report = io::to_json(r);
    report["system"] = to_string(b);
    reports.push_back(std::move(report));
    o.text += "veronese " + to_string(b) + ": " + pass_word(r.pass()) + "\n";
  }
  o.details = Json{{"systems", reports}};
  return o;
}

Outcome cmd_verify(const std::string& target, const RunConfig& cfg) {
  Outcome o;
  if (target == "thm23") {
    const RankParam p(cfg.n);
    if (p.n() > cfg.limits().max_n) throw GuardExceeded("n exceeds the guard; use --guard-override");
    const Thm23Report r = verify_thm23(p, cfg.seed);
    o.inputs = base_inputs(cfg);
    o.inputs["seed"] = cfg.seed;
    o.pass = r.pass();
    o.details = io::to_json(r);
    o.text = "thm23: " + pass_word(o.pass) + "  " + std::to_string(r.checks) + " checks, " +
             std::to_string(r.failures.size()) + " failures\n";
  } else if (target == "lemma51") {
    const Lemma51Report r = verify_lemma51(RankParam(cfg.n), cfg.kmax, cfg.limits());
    o.inputs = base_inputs(cfg);
    o.inputs["kmax"] = cfg.kmax;
    o.pass = r.pass;
    o.details = io::to_json(r);
    o.text = "lemma51: " + pass_word(r.pass) + "  " + std::to_string(r.witnesses.size()) + " tableaux factored, " +
             std::to_string(r.failures.size()) + " failures\n";
  } else if (target == "lemma52" || target == "lemma53") {
    o = verify_relations(target, cfg);
  } else if (target == "thm51") {
    const Thm51Report r = verify_thm51(RankParam(cfg.n), cfg.kmax, cfg.limits());
    o.inputs = base_inputs(cfg);
    o.inputs["kmax"] = cfg.kmax;
    o.pass = r.pass;
    o.details = io::to_json(r);
    o.text = "thm51: " + pass_word(r.pass) + "\n";
    for (const auto& row : r.rows)
      o.text += "  k=" + std::to_string(row.k) + " rank " + std::to_string(row.rank) + " / dim " +
                std::to_string(row.dim) + "\n";
  } else if (target == "prop11") {
    o = verify_prop11(cfg);
  } else if (target == "diamond") {
    o = verify_diamond(cfg);
  } else if (target == "veronese") {
    o = verify_veronese(cfg);
  } else {
    throw UsageError("unknown verify target " + target);
  }
  o.command = "verify " + target;
  return o;
}

// --- hilbert --------------------------------------------------------------

Outcome cmd_hilbert(const RunConfig& cfg) {
  const RankParam p(cfg.n);
  const CosetTuple v = resolve_selector(cfg.v, p);
  const GradedDims d = graded_dims(p, v, cfg.kmax, cfg.limits());
  Outcome o;
  o.command = "hilbert";
  o.inputs = base_inputs(cfg);
  o.inputs["v"] = cfg.v;
  o.inputs["kmax"] = cfg.kmax;
  o.details = io::to_json(d);
  o.text = io::hilbert_csv(d);
  return o;
}

// --- driver ---------------------------------------------------------------

void add_common(CLI::App* app, RunConfig& cfg, bool with_case, bool with_v) {
  app->add_option("--n", cfg.n, "rank parameter n (type D_{4n+2})")->check(CLI::PositiveNumber);
  app->add_option("--kmax", cfg.kmax, "degree bound in the 4λ grading")->check(CLI::PositiveNumber);
  app->add_option("--seed", cfg.seed, "seed for randomized checks");
  app->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text", "csv"}));
  app->add_flag("--guard-override", cfg.guard_override, "lift the enumeration guards");
  app->add_flag("--timing", cfg.timing, "include wall time in the JSON report");
  if (with_case) app->add_option("--case", cfg.case_id, "sub-case selector");
  if (with_v) app->add_option("--v", cfg.v, "Schubert point: v1..v6 or an explicit tuple");
}

void write_report_file(const Json& report, const std::string& command, std::ostream& err) {
  const char* dir = std::getenv("SPINQUOT_REPORT_DIR");
  if (dir == nullptr || *dir == '\0') return;
  std::string name = command;
  for (char& c : name)
    if (c == ' ') c = '-';
  const std::filesystem::path path = std::filesystem::path(dir) / (name + ".json");
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream file(path);
  if (!file) {
    err << "warning: cannot write " << path.string() << "\n";
    return;
  }
  file << report.dump(2) << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for torus quotients of Schubert varieties in the spinor variety"};
  app.name("spinquot");
  app.require_subcommand(1);
  RunConfig cfg;

  std::string weyl_sub;
  CLI::App* weyl = app.add_subcommand("weyl", "Weyl group and Bruhat order queries");
  weyl->add_option("command", weyl_sub, "one-line | coset | bruhat | enumerate | minimal")
      ->required()
      ->check(CLI::IsMember({"one-line", "coset", "bruhat", "enumerate", "minimal"}));
  weyl->add_option("args", cfg.args, "selectors (v1..v6 or tuples)");
  add_common(weyl, cfg, false, false);

  std::string target;
  CLI::App* verify = app.add_subcommand("verify", "Run one verification");
  verify->add_option("target", target, "thm23 | lemma51 | lemma52 | lemma53 | thm51 | prop11 | diamond | veronese")
      ->required()
      ->check(CLI::IsMember({"thm23", "lemma51", "lemma52", "lemma53", "thm51", "prop11", "diamond", "veronese"}));
  add_common(verify, cfg, true, false);

  CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert function of the invariant ring of X(v)");
  add_common(hilbert, cfg, false, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kPass;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kPass;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    if (weyl->parsed()) {
      o = cmd_weyl(weyl_sub, cfg);
    } else if (verify->parsed()) {
      o = cmd_verify(target, cfg);
    } else {
      o = cmd_hilbert(cfg);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const GuardExceeded& e) {
    err << "guard: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  Json report{{"command", o.command},
              {"inputs", o.inputs},
              {"status", o.pass ? "pass" : "fail"},
              {"details", o.details}};
  if (cfg.timing) report["timing_seconds"] = seconds;
  write_report_file(report, o.command, err);

  if (cfg.format == "json") {
    out << report.dump(2) << "\n";
  } else {
    out << o.text;
    if (!o.text.empty() && o.text.back() != '\n') out << "\n";
  }
  return o.pass ? kPass : kFail;
}

}  // namespace spinquot::cli
