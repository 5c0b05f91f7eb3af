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

#include "oracles.hpp"
#include "spinquot/ringcheck.hpp"

namespace spinquot {
namespace {

TEST(Dimensions, TwoLambdaAndFourLambdaGradingsAgree) {
  const RankParam p(1);
  const CosetTuple v4 = schubert_point(4, p);
  const GradedDims d = graded_dims(p, v4, 3);
  ASSERT_EQ(d.dims.size(), 4u);
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(d.dims[static_cast<std::size_t>(k)], dim_rk(p, v4, 2 * k));
  EXPECT_EQ(d.dims, (std::vector<std::uint64_t>{1, 10, 35, 84}));
}

TEST(Dimensions, OddDegreesOfV2) {
  // In the 2λ grading X(v2) has dimension k+1 in degree k.
  const RankParam p(1);
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(dim_rk(p, schubert_point(2, p), k), static_cast<std::uint64_t>(k + 1));
}

TEST(ClosedForms, Values) {
  EXPECT_EQ(prop11_expected(Prop11Case::I, 4), 1u);
  EXPECT_EQ(prop11_expected(Prop11Case::II, 4), 9u);
  EXPECT_EQ(prop11_expected(Prop11Case::IV, 2), 35u);
  EXPECT_EQ(prop11_expected(Prop11Case::V, 3), 28u);
  EXPECT_EQ(parse_prop11_case("IV"), Prop11Case::IV);
  EXPECT_THROW(parse_prop11_case("vi"), std::invalid_argument);
}

class FiveCases : public ::testing::TestWithParam<int> {};

TEST_P(FiveCases, HilbertFunctionRankOne) {
  const auto c = static_cast<Prop11Case>(GetParam());
  const Prop11Report r = verify_prop11(c, RankParam(1), 5);
  EXPECT_TRUE(r.pass);
  EXPECT_FALSE(r.first_failure.has_value());
  ASSERT_EQ(r.rows.size(), 6u);
  for (const Prop11Row& row : r.rows) {
    std::uint64_t independent = 0;
    switch (c) {
      case Prop11Case::I: independent = 1; break;
      case Prop11Case::II:
      case Prop11Case::III: independent = static_cast<std::uint64_t>(2 * row.k + 1); break;
      case Prop11Case::IV: independent = oracle::binomial(static_cast<std::uint64_t>(2 * row.k + 3), 3); break;
      case Prop11Case::V: independent = oracle::binomial(static_cast<std::uint64_t>(2 * row.k + 2), 2); break;
    }
    EXPECT_EQ(row.dim, independent) << "k=" << row.k;
  }
}

TEST_P(FiveCases, HilbertFunctionRankTwo) {
  EXPECT_TRUE(verify_prop11(static_cast<Prop11Case>(GetParam()), RankParam(2), 3).pass);
}

INSTANTIATE_TEST_SUITE_P(Cases, FiveCases, ::testing::Values(1, 2, 3, 4, 5));

TEST(Factorization, GeneratorsFactorAsThemselves) {
  const RankParam p(1);
  for (Generator g : all_generators()) {
    const auto blocks = factor_into_generators(generator(g, p));
    ASSERT_TRUE(blocks.has_value()) << generator_name(g);
    Tableau rebuilt(p, {});
    for (Generator b : *blocks) rebuilt = rebuilt * generator(b, p);
    EXPECT_EQ(rebuilt, generator(g, p) * Tableau(p, {}));
  }
}

TEST(Factorization, NonInvariantTableauHasNoCover) {
  const RankParam p(1);
  EXPECT_FALSE(factor_into_generators(Tableau::from_compressed(p, {{1, 2, 3, 4, 5, 6}, {1, 2, 3, 4, 5, 6}})));
}

TEST(Generation, EveryInvariantTableauFactors) {
  const Lemma51Report r = verify_lemma51(RankParam(1), 3);
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(r.failures.empty());
  EXPECT_EQ(r.checked, (std::vector<std::uint64_t>{6, 22, 62, 148, 314, 610}));
  EXPECT_EQ(r.witnesses.size(), 1162u);
}

TEST(Generation, DegreeOneProductsSpan) {
  EXPECT_EQ(degree_one_elements(RankParam(1)).size(), 22u);
  const Thm51Report r = verify_thm51(RankParam(1), 3);
  EXPECT_TRUE(r.pass);
  ASSERT_EQ(r.rows.size(), 3u);
  for (const Thm51Row& row : r.rows) EXPECT_EQ(row.rank, row.dim);
  EXPECT_EQ(r.rows[2].dim, 610u);
}

TEST(Generation, RankTwoLowDegree) {
  EXPECT_TRUE(verify_lemma51(RankParam(2), 2, {}, false).pass);
  EXPECT_TRUE(verify_thm51(RankParam(2), 2).pass);
}

TEST(Evaluation, Multiplicative) {
  const RankParam p(1);
  SeededRng rng(31);
  const SkewMatrix a = random_skew(6, rng);
  const Tableau x = generator(Generator::X1, p);
  const Tableau y = generator(Generator::Y3, p);
  EXPECT_EQ(evaluate_tableau(x * y, a), evaluate_tableau(x, a) * evaluate_tableau(y, a));
  EXPECT_EQ(evaluate_tableau(Tableau(p, {}), a), Rational(1));
  EXPECT_THROW(evaluate_tableau(x, random_skew(4, rng)), std::invalid_argument);
}

TEST(Evaluation, StandardBasisIsLinearlyIndependent) {
  // Standard monomials of degree 2 on X(v4) evaluate to independent
  // functions: the matrix of values at random points has full rank.
  const RankParam p(1);
  const std::vector<Tableau> basis = enumerate_invariant(p, 2, schubert_point(4, p));
  SeededRng rng(37);
  RationalMatrix values;
  for (std::size_t i = 0; i < basis.size() + 5; ++i) {
    const SkewMatrix a = random_skew(6, rng, 1000);
    std::vector<Rational> row;
    for (const Tableau& t : basis) row.push_back(evaluate_tableau(t, a));
    values.push_back(std::move(row));
  }
  EXPECT_EQ(rank(values), basis.size());
}

}  // namespace
}  // namespace spinquot
