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

#include "forummatrix/snapshot.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <tuple>
#include <unordered_set>
#include <utility>

namespace forummatrix {
namespace {

// Splits one CSV line. Double-quoted fields may contain commas and doubled
// quotes; embedded newlines are not supported (records are line-based).
std::vector<std::string> SplitCsvLine(std::string_view line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

std::string QuoteIfNeeded(std::string_view text) {
  const bool needs = text.find_first_of(",\"") != std::string_view::npos ||
                     Trim(text).size() != text.size();
  if (!needs) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::int64_t ParseTimestamp(std::string_view text) {
  std::string_view token = Trim(text);
  std::int64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() ||
      ptr != token.data() + token.size()) {
    throw Error(ErrorKind::kInvalidTimestamp, std::string(text),
                "timestamp '" + std::string(text) + "' is not an integer");
  }
  return value;
}

}  // namespace

DatasetSnapshot DatasetSnapshot::Build(
    std::vector<InteractionRecord> records,
    const std::map<ForumId, std::string>& names) {
  std::map<ForumId, std::vector<InteractionRecord>> grouped;
  for (auto& record : records) {
    grouped[record.forum].push_back(std::move(record));
  }

  DatasetSnapshot snapshot;
  std::vector<std::pair<ForumMeta, std::vector<InteractionRecord>>> entries;
  std::unordered_set<UserId> all_users;
  for (auto& [id, forum_records] : grouped) {
    std::sort(forum_records.begin(), forum_records.end(), RecordLess);
    std::unordered_set<UserId> users;
    for (const auto& r : forum_records) {
      users.insert(r.from);
      users.insert(r.to);
    }
    all_users.insert(users.begin(), users.end());
    ForumMeta meta;
    meta.id = id;
    auto name = names.find(id);
    meta.display_name = name != names.end() ? name->second : id.value();
    meta.user_count = static_cast<std::int64_t>(users.size());
    meta.interaction_count = static_cast<std::int64_t>(forum_records.size());
    snapshot.total_records_ += forum_records.size();
    entries.emplace_back(std::move(meta), std::move(forum_records));
  }
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return std::tie(a.first.display_name, a.first.id) <
           std::tie(b.first.display_name, b.first.id);
  });
  for (auto& [meta, forum_records] : entries) {
    snapshot.index_.emplace(meta.id, snapshot.forums_.size());
    snapshot.forums_.push_back(std::move(meta));
    snapshot.records_.push_back(std::move(forum_records));
  }
  snapshot.distinct_users_ = all_users.size();
  snapshot.built_at_ = std::chrono::system_clock::now();
  return snapshot;
}

std::size_t DatasetSnapshot::IndexOf(const ForumId& forum) const {
  auto it = index_.find(forum);
  if (it == index_.end()) {
    throw Error(ErrorKind::kUnknownForum, forum.value(),
                "unknown forum '" + forum.value() + "'");
  }
  return it->second;
}

bool DatasetSnapshot::contains(const ForumId& forum) const {
  return index_.contains(forum);
}

const ForumMeta& DatasetSnapshot::forum(const ForumId& forum) const {
  return forums_[IndexOf(forum)];
}

std::span<const InteractionRecord> DatasetSnapshot::records(
    const ForumId& forum) const {
  return records_[IndexOf(forum)];
}

std::vector<ForumMeta> ListForums(const DatasetSnapshot& snapshot) {
  return snapshot.forums();
}

std::vector<InteractionRecord> ForumRecords(const DatasetSnapshot& snapshot,
                                            const ForumId& forum) {
  auto records = snapshot.records(forum);
  return {records.begin(), records.end()};
}

IngestResult IngestCsv(std::istream& source) {
  std::string line;
  if (!std::getline(source, line)) {
    if (source.bad()) {
      throw Error(ErrorKind::kIoFailure, "", "read error before header");
    }
    throw Error(ErrorKind::kMissingHeader, "", "input is empty");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
  if (line != kCsvHeader) {
    throw Error(ErrorKind::kMissingHeader, line,
                "first line must be exactly: " + std::string(kCsvHeader));
  }

  IngestReport report;
  std::vector<InteractionRecord> records;
  std::map<ForumId, std::string> names;
  std::size_t line_number = 1;
  while (std::getline(source, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty()) continue;
    try {
      auto fields = SplitCsvLine(line);
      if (fields.size() != 8) {
        throw Error(ErrorKind::kFieldCount, std::to_string(fields.size()),
                    "expected 8 fields, found " +
                        std::to_string(fields.size()));
      }
      RawRecord raw;
      raw.forum = fields[0];
      raw.post_id = fields[2];
      raw.timestamp = ParseTimestamp(fields[3]);
      raw.from = fields[4];
      raw.to = fields[5];
      raw.trust = ParseTrustLabel(fields[6]);
      raw.sentiment = ParseSentimentLabel(fields[7]);
      InteractionRecord record = ValidateRecord(raw);
      std::string name(Trim(fields[1]));
      if (name.empty()) {
        throw Error(ErrorKind::kEmptyField, "forum_name",
                    "forum_name is empty");
      }
      auto [it, inserted] = names.emplace(record.forum, name);
      if (!inserted && it->second != name) {
        throw Error(ErrorKind::kForumNameConflict, name,
                    "forum '" + record.forum.value() + "' already named '" +
                        it->second + "'");
      }
      records.push_back(std::move(record));
      ++report.accepted;
    } catch (const Error& e) {
      report.rejected.push_back({line_number, e});
    }
  }
  if (source.bad()) {
    throw Error(ErrorKind::kIoFailure, std::to_string(line_number),
                "read error after line " + std::to_string(line_number));
  }

  IngestResult result{DatasetSnapshot::Build(std::move(records), names),
                      std::move(report)};
  result.report.forums_seen = result.snapshot.forums().size();
  result.report.users_seen = result.snapshot.distinct_users();
  return result;
}

IngestResult IngestCsvFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::kIoFailure, path, "cannot open '" + path + "'");
  }
  return IngestCsv(in);
}

void WriteCsv(const DatasetSnapshot& snapshot, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& meta : snapshot.forums()) {
    const std::string name = QuoteIfNeeded(meta.display_name);
    for (const auto& r : snapshot.records(meta.id)) {
      out << r.forum.value() << ',' << name << ',' << r.post_id << ','
          << r.timestamp << ',' << r.from.value() << ',' << r.to.value()
          << ',' << ToToken(r.trust) << ',' << ToToken(r.sentiment) << '\n';
    }
  }
}

std::string SerializeCsv(const DatasetSnapshot& snapshot) {
  std::ostringstream out;
  WriteCsv(snapshot, out);
  return out.str();
}

}  // namespace forummatrix
