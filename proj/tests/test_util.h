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

#ifndef FORUMMATRIX_TESTS_TEST_UTIL_H_
#define FORUMMATRIX_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "forummatrix/interaction.h"
#include "forummatrix/matrix.h"

namespace forummatrix::testing {

inline InteractionRecord Rec(const std::string& from, const std::string& to,
                             std::int64_t timestamp = 0,
                             const std::string& forum = "f1",
                             TrustLabel trust = TrustLabel::kTrust,
                             SentimentLabel sentiment =
                                 SentimentLabel::kPositive) {
  InteractionRecord r;
  r.forum = ForumId(forum);
  r.post_id = "p" + std::to_string(timestamp) + "-" + from + "-" + to;
  r.from = UserId(from);
  r.to = UserId(to);
  r.timestamp = timestamp;
  r.trust = trust;
  r.sentiment = sentiment;
  return r;
}

inline InteractionMatrix BuildFrom(std::vector<InteractionRecord> records,
                                   UserOrdering ordering) {
  return BuildMatrix(records, ordering);
}

// Dense counts, row = sender. Diagonal entries are ignored.
using Dense = std::vector<std::vector<std::int64_t>>;

// One record per unit of count; users named by `names`. Timestamps follow
// row-major order so FirstAppearance is deterministic.
inline std::vector<InteractionRecord> RecordsFromDense(
    const Dense& counts, const std::vector<std::string>& names,
    std::mt19937_64* rng = nullptr) {
  std::vector<InteractionRecord> records;
  std::int64_t t = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    for (std::size_t j = 0; j < counts.size(); ++j) {
      if (i == j) continue;
      for (std::int64_t k = 0; k < counts[i][j]; ++k) {
        auto r = Rec(names[i], names[j], t++);
        if (rng) {
          r.trust = kTrustLabels[(*rng)() % kTrustLabels.size()];
          r.sentiment = kSentimentLabels[(*rng)() % kSentimentLabels.size()];
        }
        records.push_back(std::move(r));
      }
    }
  }
  return records;
}

inline std::vector<std::string> DefaultNames(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("u" + std::to_string(i));
  return names;
}

inline Dense RandomDense(std::mt19937_64& rng, std::size_t n,
                         std::int64_t max_count, double zero_bias = 0.4) {
  Dense d(n, std::vector<std::int64_t>(n, 0));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || unit(rng) < zero_bias) continue;
      d[i][j] = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(
                                                      max_count)) +
                1;
    }
  }
  return d;
}

inline bool AnyInteraction(const Dense& d) {
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j)
      if (i != j && d[i][j] > 0) return true;
  return false;
}

}  // namespace forummatrix::testing

#endif  // FORUMMATRIX_TESTS_TEST_UTIL_H_
