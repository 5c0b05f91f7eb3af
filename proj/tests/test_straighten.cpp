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

#include <optional>

#include "spinquot/straighten.hpp"

namespace spinquot {
namespace {

std::shared_ptr<const RowTable> table_for(int n) { return std::make_shared<const RowTable>(RankParam(n)); }

// Value of c·Π q_row(A) computed straight from sub-Pfaffians.
Rational direct_value(const RowTable& t, const QMonomial& m, const SkewMatrix& a) {
  Rational v = 1;
  for (RowId id : m) v *= sub_pfaffian(a, dual_pair(t.row(id), t.rank_param()).b);
  return v;
}

TEST(RowTable, LinearExtensionOfBruhatOrder) {
  const auto t = table_for(1);
  ASSERT_EQ(t->size(), 32u);
  for (RowId a = 0; a < t->size(); ++a) {
    EXPECT_EQ(t->id(t->row(a)), a);
    EXPECT_EQ(t->id_of_b_mask(t->b_mask(a)), a);
    for (RowId b = 0; b < t->size(); ++b) {
      EXPECT_EQ(t->leq(a, b), bruhat_leq(t->row(a), t->row(b)));
      if (t->leq(a, b)) {
        EXPECT_LE(a, b);
      }
    }
  }
}

TEST(Laws, EveryPairIsAnIdentityAtRankOne) {
  const auto t = table_for(1);
  Straightener s(t);
  SeededRng rng(17);
  std::vector<SkewMatrix> points;
  for (int i = 0; i < 3; ++i) points.push_back(random_skew(6, rng));
  std::size_t incomparable = 0;
  for (RowId x = 0; x < t->size(); ++x)
    for (RowId y = x + 1; y < t->size(); ++y) {
      if (t->leq(x, y)) continue;
      ++incomparable;
      for (const PairTerm& term : s.law(x, y)) {
        EXPECT_TRUE(t->leq(term.a, term.b));
        EXPECT_LT(term.a, x);
        EXPECT_LT(term.a, y);
      }
      for (const SkewMatrix& a : points) {
        Rational rhs = 0;
        for (const PairTerm& term : s.law(x, y)) rhs += term.coefficient * direct_value(*t, {term.a, term.b}, a);
        EXPECT_EQ(direct_value(*t, {x, y}, a), rhs) << t->row(x).to_string() << t->row(y).to_string();
      }
    }
  EXPECT_EQ(incomparable, 66u);
}

TEST(Laws, StandardPairIsFixed) {
  const auto t = table_for(1);
  Straightener s(t);
  const RowId lo = t->id(CosetTuple({1, 2, 3, 4, 5, 6}));
  const RowId hi = t->id(CosetTuple({2, 4, 7, 8, 10, 12}));
  const QPolynomial p = s.straighten_pair(lo, hi);
  EXPECT_EQ(p, QPolynomial::monomial(t, {lo, hi}));
}

TEST(NormalForm, ProductsBecomeStandardAndKeepTheirValue) {
  const auto t = table_for(1);
  Straightener s(t);
  SeededRng rng(23);
  const SkewMatrix a = random_skew(6, rng);
  PfaffianTable table(a);
  for (int trial = 0; trial < 40; ++trial) {
    QMonomial m;
    for (int i = 0; i < 3; ++i) m.push_back(static_cast<RowId>(rng.uniform(0, 31)));
    const QPolynomial p = QPolynomial::monomial(t, m);
    NormalFormOptions first;
    NormalFormOptions last;
    last.strategy = NormalFormOptions::Strategy::kLastPair;
    const QPolynomial nf = s.normal_form(p, first);
    for (const auto& [mono, c] : nf.terms()) EXPECT_TRUE(is_standard_monomial(*t, mono));
    EXPECT_EQ(nf.evaluate(table), p.evaluate(table));
    EXPECT_EQ(nf, s.normal_form(p, last));
    EXPECT_EQ(s.normal_form(nf), nf);
  }
}

TEST(NormalForm, StepCap) {
  const auto t = table_for(2);
  Straightener s(t);
  const RankParam p(2);
  const QPolynomial big = QPolynomial::from_tableau(t, generator(Generator::X2, p) * generator(Generator::Y4, p));
  NormalFormOptions tiny;
  tiny.max_steps = 3;
  EXPECT_THROW(s.normal_form(big, tiny), StraighteningError);
}

TEST(NormalForm, EarlyBoundMatchesLateRestriction) {
  const auto t = table_for(1);
  Straightener s(t);
  const RankParam p(1);
  const CosetTuple v6 = schubert_point(6, p);
  const QPolynomial f = QPolynomial::from_tableau(t, generator(Generator::X2, p) * generator(Generator::X3, p));
  NormalFormOptions bounded;
  bounded.bound = v6;
  EXPECT_EQ(s.normal_form(f, bounded), restrict_to_schubert(s.normal_form(f), v6));
}

TEST(Restriction, DropsRowsAboveTheBound) {
  const auto t = table_for(1);
  const RankParam p(1);
  const RowId lo = t->id(CosetTuple({1, 2, 3, 4, 5, 6}));
  const RowId top = t->id(CosetTuple({7, 8, 9, 10, 11, 12}));
  QPolynomial f(t);
  f.add({lo, lo}, 2);
  f.add({lo, top}, 3);
  std::vector<QMonomial> dropped;
  const QPolynomial r = restrict_to_schubert(f, schubert_point(6, p), dropped);
  EXPECT_EQ(r, QPolynomial::monomial(t, {lo, lo}, 2));
  ASSERT_EQ(dropped.size(), 1u);
  EXPECT_EQ(dropped[0], (QMonomial{lo, top}));
}

TEST(Restriction, RejectsNonStandardInput) {
  const auto t = table_for(1);
  std::optional<std::pair<RowId, RowId>> pair;
  for (RowId a = 0; a < t->size() && !pair; ++a)
    for (RowId b = a + 1; b < t->size() && !pair; ++b)
      if (!t->leq(a, b)) pair.emplace(a, b);
  ASSERT_TRUE(pair);
  const auto [x, y] = *pair;
  EXPECT_THROW(restrict_to_schubert(QPolynomial::monomial(t, {x, y}), schubert_point(6, RankParam(1))),
               std::invalid_argument);
}

TEST(Generators, RowsAreStandardInvariantAndBelowTopPoint) {
  for (int n = 1; n <= 2; ++n) {
    const RankParam p(n);
    const CosetTuple v6 = schubert_point(6, p);
    for (Generator g : all_generators()) {
      const Tableau t = generator(g, p);
      EXPECT_TRUE(is_spin_standard(t)) << generator_name(g);
      EXPECT_TRUE(is_t_invariant(t)) << generator_name(g);
      EXPECT_TRUE(rows_bounded(t, v6)) << generator_name(g);
      EXPECT_EQ(generator_from_name(generator_name(g)), g);
    }
  }
  EXPECT_THROW(generator_from_name("W1"), std::invalid_argument);
}

TEST(Generators, BlockRows) {
  const RankParam p(2);
  EXPECT_EQ(block_row("Oade", p), (CompressedRow{1, 3, 5, 6, 9, 10}));
  EXPECT_EQ(block_row("Ebc", p), (CompressedRow{2, 4, 7, 8}));
  EXPECT_THROW(block_row("Oaa", p), std::invalid_argument);
  EXPECT_THROW(block_row("Ox", p), std::invalid_argument);
}

TEST(DisplayedLaws, MatchMonomialByMonomial) {
  Straightener s(table_for(1));
  for (const DisplayedLaw& law : displayed_laws()) {
    const LawCheck c = check_displayed_law(law, s);
    EXPECT_TRUE(c.full_ok) << law.label << " got " << c.computed_full;
    EXPECT_TRUE(c.restricted_ok) << law.label << " got " << c.computed_restricted;
  }
}

class QuadraticRelations : public ::testing::TestWithParam<int> {};

TEST_P(QuadraticRelations, VanishOnTopPointWithCertificate) {
  const RelationReport r = verify_lemma52(GetParam(), RankParam(1));
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(r.remainder.empty()) << r.remainder;
  EXPECT_TRUE(r.dropped_ok);
  EXPECT_TRUE(r.path_independent);
  EXPECT_GT(r.symbolic_laws, 0u);
  EXPECT_EQ(r.symbolic_failures, 0u);
  EXPECT_EQ(r.residual_failures, 0u);
  for (const LawCheck& c : r.displayed) EXPECT_TRUE(c.full_ok && c.restricted_ok) << c.label;
}

INSTANTIATE_TEST_SUITE_P(Cases, QuadraticRelations, ::testing::Values(1, 2, 3));

class CubicRelations : public ::testing::TestWithParam<int> {};

TEST_P(CubicRelations, VanishOnTopPointWithCertificate) {
  const RelationReport r = verify_lemma53(GetParam(), RankParam(1));
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(r.remainder.empty()) << r.remainder;
  EXPECT_EQ(r.symbolic_failures, 0u);
}

INSTANTIATE_TEST_SUITE_P(Cases, CubicRelations, ::testing::Values(1, 2));

TEST(Relations, RejectUnknownCase) {
  EXPECT_THROW(verify_lemma52(4, RankParam(1)), std::invalid_argument);
  EXPECT_THROW(verify_lemma53(0, RankParam(1)), std::invalid_argument);
}

TEST(Relations, NonRelationIsDetected) {
  // X1·X2 alone is a nonzero standard monomial on X(v6): straightening must
  // not make it vanish.
  const auto t = table_for(1);
  Straightener s(t);
  const RankParam p(1);
  NormalFormOptions bounded;
  bounded.bound = schubert_point(6, p);
  const QPolynomial f = QPolynomial::from_tableau(t, generator(Generator::X1, p) * generator(Generator::X2, p));
  EXPECT_FALSE(s.normal_form(f, bounded).is_zero());
}

}  // namespace
}  // namespace spinquot
