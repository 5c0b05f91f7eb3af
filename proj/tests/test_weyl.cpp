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

#include <algorithm>

#include "oracles.hpp"
#include "spinquot/weyl.hpp"

namespace spinquot {
namespace {

std::vector<int> entries(const CosetTuple& t) { return {t.begin(), t.end()}; }

TEST(RankParam, Dimensions) {
  const RankParam p(2);
  EXPECT_EQ(p.rank(), 10);
  EXPECT_EQ(p.ambient(), 20);
  EXPECT_EQ(p.mirror(1), 20);
  EXPECT_EQ(p.mirror(11), 10);
  EXPECT_THROW(RankParam(0), std::invalid_argument);
}

TEST(CosetTuple, RejectsNonIncreasing) {
  EXPECT_THROW(CosetTuple({2, 2, 3}), std::invalid_argument);
  EXPECT_THROW(CosetTuple({3, 1}), std::invalid_argument);
  EXPECT_NO_THROW(CosetTuple({1, 5}));
}

TEST(CosetTuple, Membership) {
  const RankParam p(1);
  EXPECT_TRUE(CosetTuple({2, 4, 7, 8, 10, 12}).is_wp_member(p));
  // 5 and its mirror 8 together.
  EXPECT_FALSE(CosetTuple({2, 4, 5, 8, 10, 12}).is_wp_member(p));
  // Three entries above the rank.
  EXPECT_FALSE(CosetTuple({1, 2, 3, 7, 8, 9}).is_wp_member(p));
}

TEST(WeylElement, Validation) {
  const RankParam p(1);
  std::vector<int> id(12);
  for (int i = 0; i < 12; ++i) id[static_cast<std::size_t>(i)] = i + 1;
  EXPECT_NO_THROW(WeylElement(p, id));
  std::vector<int> not_mirror = id;
  std::swap(not_mirror[0], not_mirror[1]);
  EXPECT_THROW(WeylElement(p, not_mirror), std::invalid_argument);
  // Swapping 6 and 7 is a mirror-symmetric transposition with odd m_w.
  std::vector<int> odd = id;
  std::swap(odd[5], odd[6]);
  EXPECT_THROW(WeylElement(p, odd), std::invalid_argument);
}

TEST(WeylElement, SimpleReflectionsAreInvolutions) {
  const RankParam p(2);
  for (int i = 1; i <= p.rank(); ++i) {
    const WeylElement s = simple_reflection(i, p);
    EXPECT_EQ(multiply(s, s), WeylElement::identity(p)) << i;
  }
}

TEST(WeylElement, CompositionConvention) {
  const RankParam p(1);
  const WeylElement a = simple_reflection(1, p);
  const WeylElement b = simple_reflection(2, p);
  const WeylElement ab = multiply(a, b);
  for (int j = 1; j <= p.ambient(); ++j) EXPECT_EQ(ab(j), a(b(j)));
  const std::vector<int> word = {1, 2};
  EXPECT_EQ(word_to_element(word, p), ab);
}

class SchubertPoints : public ::testing::TestWithParam<int> {};

TEST_P(SchubertPoints, MatchPublishedOneLineTuples) {
  const int n = GetParam();
  const RankParam p(n);
  for (int i = 1; i <= 6; ++i) {
    const std::vector<int> word = schubert_word(i, p);
    EXPECT_EQ(entries(coset_rep(word_to_element(word, p))), oracle::printed_one_line(i, n)) << "v" << i;
    EXPECT_EQ(entries(schubert_point(i, p)), oracle::printed_one_line(i, n)) << "v" << i;
  }
}

TEST_P(SchubertPoints, SublatticeOrder) {
  const RankParam p(GetParam());
  auto v = [&](int i) { return schubert_point(i, p); };
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 6}, {5, 6}}) {
    EXPECT_TRUE(bruhat_leq(v(a), v(b))) << a << " " << b;
    EXPECT_FALSE(bruhat_leq(v(b), v(a))) << a << " " << b;
  }
  for (int i = 1; i <= 6; ++i) EXPECT_TRUE(bruhat_leq(v(1), v(i)));
  EXPECT_FALSE(bruhat_leq(v(2), v(3)));
  EXPECT_FALSE(bruhat_leq(v(3), v(2)));
  EXPECT_FALSE(bruhat_leq(v(4), v(5)));
  EXPECT_FALSE(bruhat_leq(v(5), v(4)));
}

TEST_P(SchubertPoints, EnumerationMatchesBruteForce) {
  const int n = GetParam();
  const std::vector<CosetTuple> wp = enumerate_wp(RankParam(n));
  const auto brute = oracle::brute_wp(n);
  ASSERT_EQ(wp.size(), brute.size());
  EXPECT_EQ(wp.size(), std::size_t{1} << (4 * n + 1));
  for (std::size_t i = 0; i < wp.size(); ++i) EXPECT_EQ(entries(wp[i]), brute[i]);
}

TEST_P(SchubertPoints, MinimalSemistableIsV1) {
  const int n = GetParam();
  const RankParam p(n);
  const CosetTuple m = minimal_semistable(p);
  EXPECT_EQ(m, schubert_point(1, p));
  std::vector<std::vector<int>> semistable;
  for (const auto& w : oracle::brute_wp(n))
    if (oracle::spin_image_nonpositive(w, n)) semistable.push_back(w);
  for (const auto& w : semistable) EXPECT_TRUE(oracle::componentwise_leq(entries(m), w));
}

INSTANTIATE_TEST_SUITE_P(SmallRanks, SchubertPoints, ::testing::Values(1, 2));

TEST(Weights, SpinImageAgreesWithOracle) {
  const RankParam p(1);
  const Weight lambda = spin_weight(p);
  for (const CosetTuple& w : enumerate_wp(p)) {
    const bool lib = is_nonpositive_combination(act_on_weight(w, lambda, p), p);
    EXPECT_EQ(lib, oracle::spin_image_nonpositive(entries(w), 1)) << w.to_string();
  }
}

TEST(Weights, ActionOnCosetMatchesFullElement) {
  const RankParam p(1);
  const Weight lambda = spin_weight(p);
  for (int i = 1; i <= 6; ++i) {
    const WeylElement w = word_to_element(schubert_word(i, p), p);
    EXPECT_EQ(act_on_weight(w, lambda), act_on_weight(coset_rep(w), lambda, p));
  }
}

TEST(Weights, SimpleRootCoordinatesRoundTrip) {
  const RankParam p(2);
  for (int i = 1; i <= p.rank(); ++i) {
    const std::vector<Rational> c = simple_root_coordinates(simple_root(i, p), p);
    for (int j = 1; j <= p.rank(); ++j)
      EXPECT_EQ(c[static_cast<std::size_t>(j - 1)], Rational(i == j ? 1 : 0)) << i << "," << j;
  }
}

TEST(Bruhat, SizeMismatchThrows) {
  EXPECT_THROW(static_cast<void>(bruhat_leq(CosetTuple({1, 2}), CosetTuple({1, 2, 3}))), std::invalid_argument);
}

TEST(Guards, EnumerationRefusesLargeRank) {
  EXPECT_THROW(enumerate_wp(RankParam(5)), GuardExceeded);
  Limits tight;
  tight.max_n = 1;
  EXPECT_THROW(enumerate_wp(RankParam(2), tight), GuardExceeded);
}

}  // namespace
}  // namespace spinquot
