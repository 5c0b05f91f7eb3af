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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "spinquot/rewrite.hpp"

namespace spinquot::rewrite {
namespace {

std::vector<std::string> names(const ReductionSystem& s, const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(s.to_string(m));
  return out;
}

TEST(Builtins, RuleCounts) {
  EXPECT_EQ(builtin_system(Builtin::P1).rules().size(), 1u);
  EXPECT_EQ(builtin_system(Builtin::P2).rules().size(), 6u);
  EXPECT_EQ(builtin_system(Builtin::P3).rules().size(), 20u);
}

TEST(Builtins, InterReductionOfChainedRules) {
  const ReductionSystem s = builtin_system(Builtin::P3);
  const Monomial lhs = s.parse_monomial("z5 z10");
  bool found = false;
  for (const Rule& r : s.rules()) {
    if (r.lhs != lhs) continue;
    found = true;
    EXPECT_EQ(s.to_string(r.rhs), "z7*z8");
  }
  EXPECT_TRUE(found);
  for (const Rule& r : s.rules()) EXPECT_FALSE(s.first_applicable(r.rhs).has_value()) << s.to_string(r.lhs);
}

TEST(NormalForm, Examples) {
  const ReductionSystem p1 = builtin_system(Builtin::P1);
  EXPECT_EQ(p1.to_string(normal_form(p1.parse_monomial("z0 z1 z2"), p1)), "z1^3");
  const Monomial irreducible = p1.parse_monomial("z0^3 z1");
  EXPECT_EQ(normal_form(irreducible, p1), irreducible);
  const ReductionSystem p2 = builtin_system(Builtin::P2);
  EXPECT_EQ(p2.to_string(normal_form(p2.parse_monomial("z1 z2 z3"), p2)), "z4*z5*z6");
}

TEST(Overlaps, RankOneSystem) {
  const ReductionSystem p1 = builtin_system(Builtin::P1);
  EXPECT_EQ(names(p1, overlaps(p1)), (std::vector<std::string>{"z0^2*z2", "z0*z2^2"}));
}

TEST(Overlaps, PlaneSystemContainsTheSeven) {
  const ReductionSystem p2 = builtin_system(Builtin::P2);
  const std::vector<Monomial> all = overlaps(p2);
  std::set<Monomial> set(all.begin(), all.end());
  EXPECT_EQ(set.size(), all.size());
  for (const Monomial& m : listed_ambiguities(Builtin::P2)) EXPECT_TRUE(set.count(m)) << p2.to_string(m);
  // Seven cross overlaps plus two self-overlaps per rule.
  EXPECT_EQ(all.size(), 7u + 12u);
}

TEST(Overlaps, EmptySystem) {
  const ReductionSystem empty({"x", "y"}, {});
  EXPECT_TRUE(overlaps(empty).empty());
  EXPECT_TRUE(check_diamond(empty).confluent);
  EXPECT_EQ(hilbert_count(empty, 3), 4u);
}

TEST(Diamond, AllBuiltinsConfluent) {
  for (Builtin b : {Builtin::P1, Builtin::P2, Builtin::P3}) {
    const DiamondReport r = check_diamond(builtin_system(b));
    EXPECT_TRUE(r.confluent) << to_string(b);
    EXPECT_FALSE(r.divergence.has_value());
    for (const AmbiguityResult& a : r.ambiguities) EXPECT_TRUE(a.resolved);
  }
}

TEST(Diamond, PlaneAmbiguitiesResolveToListedForms) {
  const ReductionSystem s = builtin_system(Builtin::P2);
  const std::vector<std::string> expected = {"z4*z5*z6", "z4^2*z5", "z4^2*z6", "z4*z5^2",
                                             "z5^2*z6",  "z4*z6^2", "z5*z6^2"};
  const std::vector<Monomial> listed = listed_ambiguities(Builtin::P2);
  ASSERT_EQ(listed.size(), expected.size());
  for (std::size_t i = 0; i < listed.size(); ++i) {
    const AmbiguityResult r = resolve(listed[i], s);
    EXPECT_TRUE(r.resolved);
    EXPECT_GE(r.branches.size(), 2u);
    EXPECT_EQ(s.to_string(r.normal_form), expected[i]);
  }
}

TEST(Diamond, SpaceTripleProductThreeWays) {
  const ReductionSystem s = builtin_system(Builtin::P3);
  const AmbiguityResult r = resolve(s.parse_monomial("z1 z2 z3"), s);
  ASSERT_EQ(r.branches.size(), 3u);
  std::set<std::string> first_steps;
  for (const Branch& b : r.branches) {
    first_steps.insert(s.to_string(b.after_first_step));
    EXPECT_EQ(names(s, b.normal_forms), (std::vector<std::string>{"z5*z6*z8"}));
  }
  EXPECT_EQ(first_steps, (std::set<std::string>{"z3*z5^2", "z1*z8^2", "z2*z6^2"}));
}

TEST(Diamond, DetectsNonConfluence) {
  // x·y → z² and y·w → z² with x > y > z > w leave x·y·w with two forms.
  const ReductionSystem s = parse_system("variables: x y z w\nx y -> z^2\ny w -> z^2\n");
  const DiamondReport r = check_diamond(s);
  EXPECT_FALSE(r.confluent);
  ASSERT_TRUE(r.divergence.has_value());
  EXPECT_NE(r.divergence->first, r.divergence->second);
  EXPECT_THROW(hilbert_count(s, 2), RewriteError);
}

TEST(Hilbert, CountsAndVeronese) {
  const ReductionSystem p1 = builtin_system(Builtin::P1);
  const ReductionSystem p2 = builtin_system(Builtin::P2);
  const ReductionSystem p3 = builtin_system(Builtin::P3);
  for (int k = 0; k <= 6; ++k) {
    EXPECT_EQ(hilbert_count(p1, k), static_cast<std::uint64_t>(2 * k + 1));
    EXPECT_EQ(hilbert_count(p1, k), veronese_dim(1, k));
    EXPECT_EQ(hilbert_count(p2, k), veronese_dim(2, k));
    EXPECT_EQ(hilbert_count(p3, k), veronese_dim(3, k));
  }
  EXPECT_EQ(hilbert_count(p3, 1), 10u);
  EXPECT_EQ(hilbert_count(p2, 2), 15u);
  EXPECT_EQ(veronese_dim(3, 1), 10u);
  EXPECT_EQ(veronese_dim(2, 3), 28u);
  EXPECT_THROW(veronese_dim(0, 1), std::invalid_argument);
}

TEST(Veronese, IdealEqualityForAllBuiltins) {
  for (Builtin b : {Builtin::P1, Builtin::P2, Builtin::P3}) {
    const VeroneseReport r = verify_veronese_equality(builtin_system(b), builtin_matrix(b), 6);
    EXPECT_TRUE(r.rules_are_minors) << to_string(b);
    EXPECT_TRUE(r.minors_reduce_to_zero) << to_string(b);
    EXPECT_TRUE(r.hilbert_agrees) << to_string(b);
    EXPECT_EQ(r.hilbert.size(), 7u);
  }
}

TEST(Veronese, WrongRuleIsCaught) {
  // A decreasing rule that is not a minor breaks both containments.
  const ReductionSystem bad = parse_system("variables: z0 z1 z2\nz0 z1 -> z2^2\n");
  const VeroneseReport r = verify_veronese_equality(bad, builtin_matrix(Builtin::P1), 3);
  EXPECT_FALSE(r.rules_are_minors);
  EXPECT_FALSE(r.minors_reduce_to_zero);
  EXPECT_FALSE(r.pass());
}

TEST(SymMinorIdeal, Validation) {
  EXPECT_THROW(SymMinorIdeal({{"a", "b"}, {"c", "d"}}), std::invalid_argument);
  EXPECT_THROW(SymMinorIdeal({{"a"}}), std::invalid_argument);
  EXPECT_THROW(SymMinorIdeal({{"a", "b", "b"}, {"b", "c", "d"}, {"b", "d", "e"}}), std::invalid_argument);
  EXPECT_EQ(builtin_matrix(Builtin::P3).d(), 3);
}

TEST(Parsing, TextFormat) {
  const ReductionSystem s = parse_system("# comment\nz0*z2 -> z1^2   # trailing\n\n");
  EXPECT_EQ(s.variables(), (std::vector<std::string>{"z0", "z1", "z2"}));
  ASSERT_EQ(s.rules().size(), 1u);
  EXPECT_EQ(s.to_string(s.rules()[0].lhs), "z0*z2");
  // Natural order puts z10 after z9.
  const ReductionSystem t = parse_system("z9 z10 -> z10^2\n");
  EXPECT_EQ(t.variables(), (std::vector<std::string>{"z9", "z10"}));
  EXPECT_THROW(parse_system("z0 z2 = z1^2\n"), RewriteError);
  EXPECT_THROW(parse_system("variables: a b\na b -> c^2\n"), RewriteError);
}

TEST(Parsing, RejectsIncreasingRule) {
  EXPECT_THROW(parse_system("variables: z0 z1 z2\nz1^2 -> z0 z2\n"), RewriteError);
  EXPECT_THROW(parse_system("variables: a b\na -> b\n"), RewriteError);
}

TEST(Properties, RandomMonomialsPathIndependentAndIdempotent) {
  std::mt19937_64 rng(2026);
  for (Builtin b : {Builtin::P1, Builtin::P2, Builtin::P3}) {
    const ReductionSystem s = builtin_system(b);
    std::uniform_int_distribution<std::size_t> var(0, s.variable_count() - 1);
    std::uniform_int_distribution<int> deg(1, 6);
    for (int trial = 0; trial < 1000; ++trial) {
      Monomial m(s.variable_count(), 0);
      for (int d = deg(rng); d > 0; --d) ++m[var(rng)];
      const Monomial nf = normal_form(m, s);
      EXPECT_EQ(all_normal_forms(m, s), std::vector<Monomial>{nf}) << s.to_string(m);
      EXPECT_EQ(normal_form(nf, s), nf);
      EXPECT_FALSE(order_greater(nf, m));
    }
  }
}

TEST(Properties, StepCap) {
  const ReductionSystem s = builtin_system(Builtin::P2);
  EXPECT_THROW(normal_form(s.parse_monomial("z1^3 z2^3 z3^3"), s, 1), RewriteError);
}

}  // namespace
}  // namespace spinquot::rewrite
