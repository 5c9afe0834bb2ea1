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

#include "forummatrix/matrix.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>
#include <unordered_map>
#include <utility>

namespace forummatrix {
namespace {

template <typename Label, std::size_t N>
Label Dominant(const std::array<std::int64_t, N>& counts,
               const std::array<Label, N>& labels, Label neutral) {
  std::int64_t best = 0;
  std::size_t best_index = 0;
  int ties = 0;
  for (std::size_t i = 0; i < N; ++i) {
    if (counts[i] > best) {
      best = counts[i];
      best_index = i;
      ties = 1;
    } else if (counts[i] == best && best > 0) {
      ++ties;
    }
  }
  if (best == 0) {
    throw Error(ErrorKind::kEmptyCounts, "", "label counts are all zero");
  }
  return ties == 1 ? labels[best_index] : neutral;
}

}  // namespace

std::string_view ToToken(UserOrdering ordering) {
  switch (ordering) {
    case UserOrdering::kFirstAppearance: return "first_appearance";
    case UserOrdering::kActivityDescending: return "activity";
    case UserOrdering::kLexicographic: return "lexicographic";
  }
  return "first_appearance";
}

UserOrdering ParseOrdering(std::string_view token) {
  if (token == "first_appearance") return UserOrdering::kFirstAppearance;
  if (token == "activity") return UserOrdering::kActivityDescending;
  if (token == "lexicographic") return UserOrdering::kLexicographic;
  throw Error(ErrorKind::kInvalidArgument, std::string(token),
              "unknown ordering '" + std::string(token) + "'");
}

TrustLabel DominantLabel(const TrustCounts& counts) {
  return Dominant(counts, kTrustLabels, TrustLabel::kNeutralTrust);
}

SentimentLabel DominantLabel(const SentimentCounts& counts) {
  return Dominant(counts, kSentimentLabels, SentimentLabel::kNeutralSentiment);
}

InteractionMatrix::InteractionMatrix(ForumId forum, UserOrdering ordering,
                                     std::vector<UserId> users,
                                     std::vector<Cell> cells)
    : forum_(std::move(forum)),
      ordering_(ordering),
      users_(std::move(users)),
      cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end(), [](const Cell& a, const Cell& b) {
    return std::tie(a.from, a.to) < std::tie(b.from, b.to);
  });
  for (const auto& cell : cells_) {
    if (cell.from == cell.to || cell.from >= users_.size() ||
        cell.to >= users_.size() || cell.aggregate.count <= 0) {
      throw Error(ErrorKind::kInvalidArgument, "",
                  "cell outside the off-diagonal grid or with no count");
    }
    total_count_ += cell.aggregate.count;
    max_count_ = std::max(max_count_, cell.aggregate.count);
  }
}

const CellAggregate* InteractionMatrix::find(std::size_t from,
                                             std::size_t to) const {
  auto it = std::lower_bound(
      cells_.begin(), cells_.end(), std::make_pair(from, to),
      [](const Cell& cell, const std::pair<std::size_t, std::size_t>& key) {
        return std::tie(cell.from, cell.to) < std::tie(key.first, key.second);
      });
  if (it == cells_.end() || it->from != from || it->to != to) return nullptr;
  return &it->aggregate;
}

std::int64_t InteractionMatrix::count(std::size_t from, std::size_t to) const {
  const CellAggregate* cell = find(from, to);
  return cell ? cell->count : 0;
}

std::vector<UserId> OrderUsers(std::span<const InteractionRecord> records,
                               UserOrdering ordering) {
  if (records.empty()) {
    throw Error(ErrorKind::kEmptyForum, "", "no records to order");
  }
  // Per user: (first timestamp, role) with sender role 0, and activity.
  struct Seen {
    std::int64_t timestamp;
    int role;
    std::int64_t activity;
  };
  std::map<UserId, Seen> seen;
  auto visit = [&seen](const UserId& user, std::int64_t timestamp, int role) {
    auto [it, inserted] = seen.try_emplace(user, Seen{timestamp, role, 0});
    Seen& s = it->second;
    if (std::tie(timestamp, role) < std::tie(s.timestamp, s.role)) {
      s.timestamp = timestamp;
      s.role = role;
    }
    ++s.activity;
  };
  for (const auto& record : records) {
    visit(record.from, record.timestamp, 0);
    visit(record.to, record.timestamp, 1);
  }

  std::vector<std::pair<UserId, Seen>> users(seen.begin(), seen.end());
  switch (ordering) {
    case UserOrdering::kFirstAppearance:
      std::stable_sort(users.begin(), users.end(),
                       [](const auto& a, const auto& b) {
                         return std::tie(a.second.timestamp, a.second.role) <
                                std::tie(b.second.timestamp, b.second.role);
                       });
      break;
    case UserOrdering::kActivityDescending:
      std::stable_sort(users.begin(), users.end(),
                       [](const auto& a, const auto& b) {
                         return a.second.activity > b.second.activity;
                       });
      break;
    case UserOrdering::kLexicographic:
      break;  // std::map order
  }
  std::vector<UserId> out;
  out.reserve(users.size());
  for (auto& [user, unused] : users) out.push_back(user);
  return out;
}

InteractionMatrix BuildMatrix(std::span<const InteractionRecord> records,
                              UserOrdering ordering) {
  if (records.empty()) {
    throw Error(ErrorKind::kEmptyForum, "", "no records for matrix");
  }
  const ForumId& forum = records.front().forum;
  for (const auto& record : records) {
    if (record.forum != forum) {
      throw Error(ErrorKind::kMixedForums, record.forum.value(),
                  "records from forums '" + forum.value() + "' and '" +
                      record.forum.value() + "'");
    }
  }

  std::vector<UserId> users = OrderUsers(records, ordering);
  std::unordered_map<UserId, std::size_t> index;
  index.reserve(users.size());
  for (std::size_t i = 0; i < users.size(); ++i) index.emplace(users[i], i);

  const std::size_t n = users.size();
  std::unordered_map<std::size_t, CellAggregate> aggregates;
  for (const auto& record : records) {
    const std::size_t from = index.at(record.from);
    const std::size_t to = index.at(record.to);
    CellAggregate& cell = aggregates[from * n + to];
    ++cell.count;
    ++cell.trust_counts[static_cast<std::size_t>(record.trust)];
    ++cell.sentiment_counts[static_cast<std::size_t>(record.sentiment)];
  }

  std::vector<Cell> cells;
  cells.reserve(aggregates.size());
  for (auto& [key, aggregate] : aggregates) {
    aggregate.dominant_trust = DominantLabel(aggregate.trust_counts);
    aggregate.dominant_sentiment = DominantLabel(aggregate.sentiment_counts);
    cells.push_back({key / n, key % n, aggregate});
  }
  return InteractionMatrix(forum, ordering, std::move(users), std::move(cells));
}

ColorScale::ColorScale(std::int64_t max_count, int bucket_count)
    : max_count_(max_count), bucket_count_(bucket_count) {
  if (bucket_count < 2 || max_count < 0) {
    throw Error(ErrorKind::kInvalidArgument, std::to_string(bucket_count),
                "color scale needs bucket_count >= 2 and max_count >= 0");
  }
  ranges_.push_back({0, 0});
  const std::int64_t slots = bucket_count - 1;
  if (max_count <= slots) {
    for (std::int64_t c = 1; c <= max_count; ++c) ranges_.push_back({c, c});
    return;
  }
  const std::int64_t width = max_count / slots;
  const std::int64_t wider = max_count % slots;
  std::int64_t low = 1;
  for (std::int64_t b = 0; b < slots; ++b) {
    const std::int64_t size = width + (b < wider ? 1 : 0);
    ranges_.push_back({low, low + size - 1});
    low += size;
  }
}

int ColorScale::bucket(std::int64_t count) const {
  if (count <= 0) return 0;
  if (count >= max_count_) return used_buckets() - 1;
  const std::int64_t slots = bucket_count_ - 1;
  if (max_count_ <= slots) return static_cast<int>(count);
  const std::int64_t width = max_count_ / slots;
  const std::int64_t wider = max_count_ % slots;
  const std::int64_t wide_span = wider * (width + 1);
  if (count <= wide_span) return static_cast<int>(1 + (count - 1) / (width + 1));
  return static_cast<int>(1 + wider + (count - 1 - wide_span) / width);
}

std::vector<std::string> ColorScale::legend_labels() const {
  std::vector<std::string> labels;
  labels.reserve(ranges_.size());
  for (const auto& r : ranges_) {
    labels.push_back(r.low == r.high
                         ? std::to_string(r.low)
                         : std::to_string(r.low) + "-" + std::to_string(r.high));
  }
  return labels;
}

ColorScale MakeColorScale(std::int64_t max_count, int bucket_count) {
  return ColorScale(max_count, bucket_count);
}

}  // namespace forummatrix
