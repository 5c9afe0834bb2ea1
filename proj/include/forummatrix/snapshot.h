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

#ifndef FORUMMATRIX_SNAPSHOT_H_
#define FORUMMATRIX_SNAPSHOT_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "forummatrix/error.h"
#include "forummatrix/interaction.h"

namespace forummatrix {

struct ForumMeta {
  ForumId id;
  std::string display_name;
  std::int64_t user_count = 0;  // distinct senders and recipients
  std::int64_t interaction_count = 0;

  friend bool operator==(const ForumMeta&, const ForumMeta&) = default;
};

// Immutable loaded corpus. Forums are sorted by (display_name, id) and each
// forum's records are sorted with RecordLess.
class DatasetSnapshot {
 public:
  DatasetSnapshot() = default;

  // `names` maps every forum id referenced by `records` to its display
  // name; forums without a name fall back to the id.
  static DatasetSnapshot Build(std::vector<InteractionRecord> records,
                               const std::map<ForumId, std::string>& names);

  const std::vector<ForumMeta>& forums() const { return forums_; }
  bool contains(const ForumId& forum) const;
  // Throws Error(kUnknownForum).
  const ForumMeta& forum(const ForumId& forum) const;
  std::span<const InteractionRecord> records(const ForumId& forum) const;

  std::size_t total_records() const { return total_records_; }
  std::size_t distinct_users() const { return distinct_users_; }
  std::chrono::system_clock::time_point built_at() const { return built_at_; }

  // Content equality; built_at is ignored.
  friend bool operator==(const DatasetSnapshot& a, const DatasetSnapshot& b) {
    return a.forums_ == b.forums_ && a.records_ == b.records_;
  }

 private:
  std::size_t IndexOf(const ForumId& forum) const;

  std::vector<ForumMeta> forums_;
  std::vector<std::vector<InteractionRecord>> records_;  // parallel to forums_
  std::map<ForumId, std::size_t> index_;
  std::size_t total_records_ = 0;
  std::size_t distinct_users_ = 0;
  std::chrono::system_clock::time_point built_at_{};
};

std::vector<ForumMeta> ListForums(const DatasetSnapshot& snapshot);
// Throws Error(kUnknownForum).
std::vector<InteractionRecord> ForumRecords(const DatasetSnapshot& snapshot,
                                            const ForumId& forum);

struct RejectedLine {
  std::size_t line;  // 1-based physical line, header is line 1
  Error error;
};

struct IngestReport {
  std::size_t accepted = 0;
  std::vector<RejectedLine> rejected;
  std::size_t forums_seen = 0;
  std::size_t users_seen = 0;
};

struct IngestResult {
  DatasetSnapshot snapshot;
  IngestReport report;
};

inline constexpr std::string_view kCsvHeader =
    "forum_id,forum_name,post_id,timestamp,from_user,to_user,trust,sentiment";

// Bad data lines are rejected one by one. Throws Error(kMissingHeader) when
// the first line is not kCsvHeader, Error(kIoFailure) on stream errors.
// Blank lines are skipped and not counted.
IngestResult IngestCsv(std::istream& source);
IngestResult IngestCsvFile(const std::string& path);

// Same layout, header first, rows in canonical forum/record order.
void WriteCsv(const DatasetSnapshot& snapshot, std::ostream& out);
std::string SerializeCsv(const DatasetSnapshot& snapshot);

}  // namespace forummatrix

#endif  // FORUMMATRIX_SNAPSHOT_H_
