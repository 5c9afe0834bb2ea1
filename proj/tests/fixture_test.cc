// Copyright 2026 The forummatrix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "forummatrix/fixture.h"

#include <map>
#include <set>

#include "forummatrix/metrics.h"
#include "gtest/gtest.h"

namespace forummatrix {
namespace {

FixtureSpec Spec(int forums, int users, std::int64_t interactions,
                 std::vector<Regime> regimes, std::uint64_t seed) {
  FixtureSpec spec;
  spec.forum_count = forums;
  spec.user_count = users;
  spec.interaction_count = interactions;
  spec.regimes = std::move(regimes);
  spec.seed = seed;
  return spec;
}

TEST(GenerateFixtureTest, CorpusTotalsExact) {
  const auto snapshot =
      GenerateFixture(Spec(53, 1292, 5823,
                           {Regime::kLeaderDominated, Regime::kDispersed,
                            Regime::kReciprocal},
                           7));
  EXPECT_EQ(snapshot.forums().size(), 53u);
  EXPECT_EQ(snapshot.distinct_users(), 1292u);
  EXPECT_EQ(snapshot.total_records(), 5823u);
  for (const auto& f : snapshot.forums()) {
    EXPECT_GE(f.user_count, 2);
    EXPECT_GE(f.interaction_count, 1);
  }
}

TEST(GenerateFixtureTest, SameSeedSameBytes) {
  const auto spec = Spec(5, 60, 400, {Regime::kDispersed}, 42);
  EXPECT_EQ(SerializeCsv(GenerateFixture(spec)),
            SerializeCsv(GenerateFixture(spec)));
  auto other = spec;
  other.seed = 43;
  EXPECT_NE(SerializeCsv(GenerateFixture(spec)),
            SerializeCsv(GenerateFixture(other)));
}

TEST(GenerateFixtureTest, TwoUsersOneReciprocalInteraction) {
  // The odd leftover stays one-directional.
  const auto snapshot =
      GenerateFixture(Spec(1, 2, 1, {Regime::kReciprocal}, 5));
  ASSERT_EQ(snapshot.forums().size(), 1u);
  EXPECT_EQ(snapshot.total_records(), 1u);
  EXPECT_EQ(snapshot.distinct_users(), 2u);
}

TEST(GenerateFixtureTest, InfeasibleSpecs) {
  auto infeasible = [](const FixtureSpec& spec) {
    try {
      GenerateFixture(spec);
    } catch (const Error& e) {
      return e.kind() == ErrorKind::kInfeasibleSpec;
    }
    return false;
  };
  EXPECT_TRUE(infeasible(Spec(1, 1, 1, {Regime::kDispersed}, 0)));
  EXPECT_TRUE(infeasible(Spec(3, 5, 10, {Regime::kDispersed}, 0)));
  EXPECT_TRUE(infeasible(Spec(1, 2, 2 * kMaxPairMultiplicity + 1,
                              {Regime::kDispersed}, 0)));
  EXPECT_TRUE(infeasible(Spec(1, 10, 4, {Regime::kDispersed}, 0)));
  EXPECT_TRUE(infeasible(Spec(0, 10, 10, {Regime::kDispersed}, 0)));
  EXPECT_TRUE(infeasible(Spec(1, 10, 0, {Regime::kDispersed}, 0)));
  EXPECT_FALSE(infeasible(Spec(1, 2, 2 * kMaxPairMultiplicity,
                               {Regime::kReciprocal}, 0)));
}

TEST(GenerateFixtureTest, PairMultiplicityBounded) {
  const auto snapshot = GenerateFixture(
      Spec(1, 3, 6 * kMaxPairMultiplicity, {Regime::kLeaderDominated}, 9));
  std::map<std::pair<std::string, std::string>, std::int64_t> pairs;
  for (const auto& r : snapshot.records(snapshot.forums()[0].id)) {
    ++pairs[{r.from.value(), r.to.value()}];
  }
  EXPECT_EQ(pairs.size(), 6u);
  for (const auto& [pair, count] : pairs) {
    EXPECT_EQ(count, kMaxPairMultiplicity);
  }
}

TEST(GenerateFixtureTest, ReciprocalRegimeMirrorsPairs) {
  const auto snapshot =
      GenerateFixture(Spec(1, 12, 80, {Regime::kReciprocal}, 3));
  std::map<std::pair<std::string, std::string>, std::int64_t> pairs;
  for (const auto& r : snapshot.records(snapshot.forums()[0].id)) {
    ++pairs[{r.from.value(), r.to.value()}];
  }
  for (const auto& [pair, count] : pairs) {
    EXPECT_TRUE(pairs.contains({pair.second, pair.first}))
        << pair.first << "->" << pair.second;
  }
}

TEST(GenerateFixtureTest, LeaderDominatedTopTwoShare) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int users = 6 + static_cast<int>(seed % 30);
    const auto snapshot = GenerateFixture(
        Spec(1, users, users * 3, {Regime::kLeaderDominated}, seed));
    const auto matrix = BuildMatrix(snapshot.records(snapshot.forums()[0].id),
                                    UserOrdering::kFirstAppearance);
    EXPECT_GE(ComputeDispersion(matrix).top2_share, 0.6) << "seed " << seed;
  }
}

TEST(ParseRegimeTest, Tokens) {
  for (Regime r : {Regime::kLeaderDominated, Regime::kDispersed,
                   Regime::kReciprocal}) {
    EXPECT_EQ(ParseRegime(ToToken(r)), r);
  }
  EXPECT_THROW(ParseRegime("mixed"), Error);
}

}  // namespace
}  // namespace forummatrix
