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

#include <bit>

#include "oracles.hpp"
#include "spinquot/pfaffian.hpp"

namespace spinquot {
namespace {

oracle::Matrix to_oracle(const SkewMatrix& a) {
  oracle::Matrix m;
  for (const auto& row : a.dense()) m.emplace_back(row.begin(), row.end());
  return m;
}

IndexSet from_mask(std::uint32_t mask) {
  IndexSet out;
  for (int i = 1; mask != 0; ++i, mask >>= 1)
    if (mask & 1U) out.push_back(i);
  return out;
}

TEST(SkewMatrix, RejectsNonSkew) {
  RationalMatrix m = {{0, 1}, {1, 0}};
  EXPECT_THROW(SkewMatrix{m}, std::invalid_argument);
  RationalMatrix d = {{1, 0}, {0, 0}};
  EXPECT_THROW(SkewMatrix{d}, std::invalid_argument);
  RationalMatrix ok = {{0, 2}, {-2, 0}};
  EXPECT_EQ(pfaffian(SkewMatrix(ok)), Rational(2));
}

TEST(Pfaffian, SmallClosedForms) {
  SkewMatrix a(4);
  a.set(1, 2, 2);
  a.set(1, 3, 3);
  a.set(1, 4, 5);
  a.set(2, 3, 7);
  a.set(2, 4, 11);
  a.set(3, 4, 13);
  // a12 a34 − a13 a24 + a14 a23
  EXPECT_EQ(pfaffian(a), Rational(2 * 13 - 3 * 11 + 5 * 7));
  EXPECT_EQ(pfaffian(SkewMatrix(3)), Rational(0));
  EXPECT_EQ(pfaffian(SkewMatrix(0)), Rational(1));
}

class RandomSizes : public ::testing::TestWithParam<int> {};

TEST_P(RandomSizes, SquareIsDeterminant) {
  SeededRng rng(GetParam());
  for (int trial = 0; trial < 5; ++trial) {
    const SkewMatrix a = random_skew(GetParam(), rng);
    const Rational pf = pfaffian(a);
    EXPECT_EQ(pf * pf, oracle::bareiss_det(to_oracle(a)));
  }
}

TEST(Pfaffian, AgreesWithMatchingSum) {
  for (int size = 2; size <= 10; size += 2) {
    SeededRng rng(100 + size);
    const SkewMatrix a = random_skew(size, rng, 50);
    EXPECT_EQ(pfaffian(a), oracle::matching_pfaffian(to_oracle(a))) << size;
  }
}

TEST_P(RandomSizes, RowColumnScaling) {
  SeededRng rng(200 + GetParam());
  SkewMatrix a = random_skew(GetParam(), rng);
  const Rational before = pfaffian(a);
  const Rational c(7, 3);
  const int i = 2;
  for (int j = 1; j <= a.size(); ++j)
    if (j != i) a.set(i, j, a.entry(i, j) * c);
  EXPECT_EQ(pfaffian(a), before * c);
}

INSTANTIATE_TEST_SUITE_P(EvenSizes, RandomSizes, ::testing::Values(2, 4, 6, 8, 10, 12));

TEST(Pfaffian, RationalEntries) {
  SkewMatrix a(4);
  a.set(1, 2, Rational(1, 2));
  a.set(3, 4, Rational(-2, 3));
  EXPECT_EQ(pfaffian(a), Rational(-1, 3));
}

TEST(SubPfaffian, OddAndEmpty) {
  SeededRng rng(3);
  const SkewMatrix a = random_skew(6, rng);
  EXPECT_EQ(sub_pfaffian(a, {}), Rational(1));
  EXPECT_EQ(sub_pfaffian(a, {1, 3, 5}), Rational(0));
  EXPECT_EQ(sub_pfaffian(a, {2, 5}), a.entry(2, 5));
  PfaffianTable table(a);
  for (std::uint32_t m = 0; m < 64; ++m) EXPECT_EQ(table(m), sub_pfaffian(a, from_mask(m)));
}

TEST(ReferenceMatrix, PfaffianSign) {
  // The matching-sign Pfaffian of the reference matrix is (−1)^n; the
  // normalization to +1 holds only for even n.
  for (int n = 1; n <= 3; ++n)
    EXPECT_EQ(pfaffian(reference_matrix(RankParam(n))), Rational(n % 2 == 0 ? 1 : -1)) << n;
}

TEST(DualPairs, ExampleAndRoundTrip) {
  const RankParam p(1);
  EXPECT_EQ(remark25_tuple({1, 3, 5, 6}, p), CosetTuple({2, 4, 7, 8, 10, 12}));
  EXPECT_EQ(remark25_tuple({}, p), CosetTuple({1, 2, 3, 4, 5, 6}));
  for (std::uint32_t m = 0; m < 64; ++m) {
    if (std::popcount(m) % 2 == 1) continue;
    const IndexSet i = from_mask(m);
    const CosetTuple row = remark25_tuple(i, p);
    EXPECT_TRUE(row.is_wp_member(p));
    const DualPair d = dual_pair(row, p);
    EXPECT_EQ(d.a, d.b);
    EXPECT_EQ(d.b, i);
  }
}

TEST(DualPairs, QIsSubPfaffian) {
  const RankParam p(2);
  SeededRng rng(11);
  const SkewMatrix a = random_skew(p.rank(), rng);
  PfaffianTable table(a);
  for (std::uint32_t m : {0U, 3U, 0x0FU, 0x155U, 0x3FFU, 0x2A8U}) {
    const IndexSet i = from_mask(m);
    EXPECT_EQ(q(remark25_tuple(i, p), table), sub_pfaffian(a, i));
  }
}

TEST(Exchange, EqualSetsGiveEmptySum) {
  SeededRng rng(5);
  const SkewMatrix a = random_skew(6, rng);
  EXPECT_EQ(exchange_residual(a, {1, 2, 3}, {1, 2, 3}), Rational(0));
}

TEST(Exchange, FixedPairManyMatrices) {
  SeededRng rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const SkewMatrix a = random_skew(6, rng);
    EXPECT_EQ(exchange_residual(a, {2, 4, 5}, {1, 2, 3}), Rational(0));
  }
}

TEST(Exchange, EvenCardinalityRejected) {
  SeededRng rng(7);
  const SkewMatrix a = random_skew(6, rng);
  EXPECT_THROW(static_cast<void>(exchange_residual(a, {1, 2}, {1, 2, 3})), std::invalid_argument);
}

TEST(Exchange, FullSweep) {
  const Thm23Report r1 = verify_thm23(RankParam(1), 7, 1, 0);
  EXPECT_TRUE(r1.pass());
  EXPECT_EQ(r1.checks, 32u * 32u);
  const Thm23Report r2 = verify_thm23(RankParam(2), 7, 0, 50);
  EXPECT_TRUE(r2.pass());
  EXPECT_EQ(r2.checks, 50u);
}

TEST(Symbolic, SubPfaffianPolynomialEvaluates) {
  SeededRng rng(9);
  const SkewMatrix a = random_skew(6, rng, 20);
  const SparsePolynomial f = symbolic_sub_pfaffian(6, {1, 2, 4, 6});
  std::vector<Rational> point(15);
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) point[skew_variable(6, i, j)] = a.entry(i, j);
  EXPECT_EQ(f.evaluate(point), sub_pfaffian(a, {1, 2, 4, 6}));
}

TEST(Random, DeterministicUnderSeed) {
  SeededRng r1(42);
  SeededRng r2(42);
  EXPECT_EQ(random_skew(8, r1), random_skew(8, r2));
  SeededRng parent(42);
  EXPECT_NE(random_skew(8, *std::make_unique<SeededRng>(parent.split(1))),
            random_skew(8, *std::make_unique<SeededRng>(parent.split(2))));
}

}  // namespace
}  // namespace spinquot
