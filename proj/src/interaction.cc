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

#include "forummatrix/interaction.h"

#include <algorithm>
#include <cctype>
#include <string>
#include <tuple>

#include "forummatrix/error.h"

namespace forummatrix {
namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
         c == '\v';
}

std::string Lowercase(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

std::string CheckedToken(std::string_view text, std::string_view what) {
  std::string_view trimmed = Trim(text);
  if (trimmed.empty()) {
    throw Error(ErrorKind::kEmptyField, std::string(what),
                std::string(what) + " is empty");
  }
  for (unsigned char c : trimmed) {
    if (c < 0x20 || c == 0x7f || c == ',') {
      throw Error(ErrorKind::kInvalidIdentifier, std::string(trimmed),
                  std::string(what) + " '" + std::string(trimmed) +
                      "' contains a comma or control character");
    }
  }
  return std::string(trimmed);
}

}  // namespace

std::string_view Trim(std::string_view text) {
  while (!text.empty() && IsSpace(text.front())) text.remove_prefix(1);
  while (!text.empty() && IsSpace(text.back())) text.remove_suffix(1);
  return text;
}

UserId::UserId(std::string_view text) : value_(CheckedToken(text, "user")) {}

ForumId::ForumId(std::string_view text)
    : value_(CheckedToken(text, "forum")) {}

TrustLabel ParseTrustLabel(std::string_view text) {
  const std::string token = Lowercase(Trim(text));
  if (token == "trust") return TrustLabel::kTrust;
  if (token == "neutral") return TrustLabel::kNeutralTrust;
  if (token == "mistrust") return TrustLabel::kMistrust;
  throw Error(ErrorKind::kUnknownLabel, std::string(text),
              "unknown trust label '" + std::string(text) + "'");
}

SentimentLabel ParseSentimentLabel(std::string_view text) {
  const std::string token = Lowercase(Trim(text));
  if (token == "positive") return SentimentLabel::kPositive;
  if (token == "negative") return SentimentLabel::kNegative;
  if (token == "neutral") return SentimentLabel::kNeutralSentiment;
  if (token == "unrelated") return SentimentLabel::kUnrelated;
  throw Error(ErrorKind::kUnknownLabel, std::string(text),
              "unknown sentiment label '" + std::string(text) + "'");
}

std::string_view ToToken(TrustLabel label) {
  switch (label) {
    case TrustLabel::kTrust: return "trust";
    case TrustLabel::kNeutralTrust: return "neutral";
    case TrustLabel::kMistrust: return "mistrust";
  }
  return "neutral";
}

std::string_view ToToken(SentimentLabel label) {
  switch (label) {
    case SentimentLabel::kPositive: return "positive";
    case SentimentLabel::kNegative: return "negative";
    case SentimentLabel::kNeutralSentiment: return "neutral";
    case SentimentLabel::kUnrelated: return "unrelated";
  }
  return "neutral";
}

bool RecordLess(const InteractionRecord& a, const InteractionRecord& b) {
  return std::tie(a.timestamp, a.post_id, a.from, a.to) <
         std::tie(b.timestamp, b.post_id, b.from, b.to);
}

InteractionRecord ValidateRecord(const RawRecord& candidate) {
  InteractionRecord record;
  record.forum = ForumId(candidate.forum);
  record.post_id = CheckedToken(candidate.post_id, "post_id");
  // Field names in EmptyField errors follow the record's own naming.
  auto user = [](const std::string& text, std::string_view field) {
    if (Trim(text).empty()) {
      throw Error(ErrorKind::kEmptyField, std::string(field),
                  std::string(field) + " is empty");
    }
    return UserId(text);
  };
  record.from = user(candidate.from, "from");
  record.to = user(candidate.to, "to");
  if (candidate.timestamp < 0) {
    throw Error(ErrorKind::kNegativeTimestamp,
                std::to_string(candidate.timestamp),
                "timestamp " + std::to_string(candidate.timestamp) +
                    " is negative");
  }
  record.timestamp = candidate.timestamp;
  if (record.from == record.to) {
    throw Error(ErrorKind::kSelfInteraction, record.from.value(),
                "user '" + record.from.value() + "' interacts with itself");
  }
  record.trust = candidate.trust;
  record.sentiment = candidate.sentiment;
  return record;
}

}  // namespace forummatrix
