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

#ifndef FORUMMATRIX_MATRIX_H_
#define FORUMMATRIX_MATRIX_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "forummatrix/error.h"
#include "forummatrix/interaction.h"

namespace forummatrix {

enum class UserOrdering {
  // Earliest timestamp in any role; at equal timestamps the sender role
  // comes first, then UserId.
  kFirstAppearance,
  // Records sent plus received, descending; ties by UserId.
  kActivityDescending,
  kLexicographic,
};

// Tokens: first_appearance, activity, lexicographic.
std::string_view ToToken(UserOrdering ordering);
// Throws Error(kInvalidArgument).
UserOrdering ParseOrdering(std::string_view token);

using TrustCounts = std::array<std::int64_t, kTrustLabels.size()>;
using SentimentCounts = std::array<std::int64_t, kSentimentLabels.size()>;

// Unique maximum wins; any tie for the maximum yields the neutral member.
// Throws Error(kEmptyCounts) when every count is zero.
TrustLabel DominantLabel(const TrustCounts& counts);
SentimentLabel DominantLabel(const SentimentCounts& counts);

struct CellAggregate {
  std::int64_t count = 0;
  TrustCounts trust_counts{};
  SentimentCounts sentiment_counts{};
  TrustLabel dominant_trust = TrustLabel::kNeutralTrust;
  SentimentLabel dominant_sentiment = SentimentLabel::kNeutralSentiment;
};

struct Cell {
  std::size_t from;  // row index into users
  std::size_t to;    // column index into users
  CellAggregate aggregate;
};

// Square user x user matrix for one forum. Only nonzero off-diagonal cells
// are stored, sorted by (from, to); absent cells are zero interactions.
class InteractionMatrix {
 public:
  InteractionMatrix(ForumId forum, UserOrdering ordering,
                    std::vector<UserId> users, std::vector<Cell> cells);

  const ForumId& forum() const { return forum_; }
  UserOrdering ordering() const { return ordering_; }
  const std::vector<UserId>& users() const { return users_; }
  std::size_t size() const { return users_.size(); }
  std::span<const Cell> cells() const { return cells_; }
  std::int64_t total_count() const { return total_count_; }
  std::int64_t max_count() const { return max_count_; }

  // Zero when the cell is absent or on the diagonal.
  std::int64_t count(std::size_t from, std::size_t to) const;
  // nullptr when absent.
  const CellAggregate* find(std::size_t from, std::size_t to) const;

 private:
  ForumId forum_;
  UserOrdering ordering_;
  std::vector<UserId> users_;
  std::vector<Cell> cells_;
  std::int64_t total_count_ = 0;
  std::int64_t max_count_ = 0;
};

// Throws Error(kEmptyForum) for no records.
std::vector<UserId> OrderUsers(std::span<const InteractionRecord> records,
                               UserOrdering ordering);

// Throws Error(kEmptyForum) or Error(kMixedForums).
InteractionMatrix BuildMatrix(std::span<const InteractionRecord> records,
                              UserOrdering ordering);

// Frequency buckets: bucket 0 is count 0, counts 1..max_count are split into
// bucket_count-1 contiguous ranges whose sizes differ by at most one, the
// larger ranges first. With max_count <= bucket_count-1 every count gets its
// own bucket and the upper buckets stay unused.
class ColorScale {
 public:
  struct Range {
    std::int64_t low;
    std::int64_t high;
  };

  // Throws Error(kInvalidArgument) for bucket_count < 2 or max_count < 0.
  ColorScale(std::int64_t max_count, int bucket_count);

  int bucket_count() const { return bucket_count_; }
  std::int64_t max_count() const { return max_count_; }
  // Counts above max_count clamp to the top used bucket.
  int bucket(std::int64_t count) const;
  // Count range per used bucket, index 0 is {0, 0}.
  const std::vector<Range>& ranges() const { return ranges_; }
  int used_buckets() const { return static_cast<int>(ranges_.size()); }
  // "0", "3", "14-26".
  std::vector<std::string> legend_labels() const;

 private:
  std::int64_t max_count_;
  int bucket_count_;
  std::vector<Range> ranges_;
};

inline constexpr int kDefaultBucketCount = 9;

ColorScale MakeColorScale(std::int64_t max_count,
                          int bucket_count = kDefaultBucketCount);

}  // namespace forummatrix

#endif  // FORUMMATRIX_MATRIX_H_
