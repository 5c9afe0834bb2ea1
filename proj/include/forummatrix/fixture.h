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

// Seeded synthetic corpora with exact aggregate counts and a chosen
// interaction shape per forum.

#ifndef FORUMMATRIX_FIXTURE_H_
#define FORUMMATRIX_FIXTURE_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "forummatrix/snapshot.h"

namespace forummatrix {

enum class Regime {
  // Two designated users take part in most records.
  kLeaderDominated,
  // Ordered pairs drawn uniformly.
  kDispersed,
  // Every drawn pair is emitted in both directions.
  kReciprocal,
};

// Throws Error(kInvalidArgument).
Regime ParseRegime(std::string_view token);
std::string_view ToToken(Regime regime);

// Upper bound on records per ordered user pair within one forum.
inline constexpr std::int64_t kMaxPairMultiplicity = 64;

// Share of non-coverage records in a leader-dominated forum that touch one
// of the two leaders.
inline constexpr double kLeaderTouchProbability = 0.9;

struct FixtureSpec {
  int forum_count = 1;
  int user_count = 2;  // distinct users across the whole corpus
  std::int64_t interaction_count = 1;
  // One entry applies to every forum; otherwise forum i uses
  // regimes[i % regimes.size()].
  std::vector<Regime> regimes = {Regime::kDispersed};
  std::uint64_t seed = 0;
};

// Deterministic for a fixed spec. Users are partitioned across forums (each
// forum gets at least two) and every user appears in at least one record.
// Throws Error(kInfeasibleSpec) when the counts cannot be met exactly.
DatasetSnapshot GenerateFixture(const FixtureSpec& spec);

}  // namespace forummatrix

#endif  // FORUMMATRIX_FIXTURE_H_
