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

// Domain vocabulary: identifiers, the trust and sentiment taxonomies, and
// validated interaction records.

#ifndef FORUMMATRIX_INTERACTION_H_
#define FORUMMATRIX_INTERACTION_H_

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace forummatrix {

// Identifier tokens are trimmed, non-empty and free of control characters
// and commas so that they survive a CSV round trip unquoted.
class UserId {
 public:
  UserId() = default;
  // Throws Error(kEmptyField) or Error(kInvalidIdentifier).
  explicit UserId(std::string_view text);

  const std::string& value() const { return value_; }

  friend auto operator<=>(const UserId&, const UserId&) = default;
  friend bool operator==(const UserId&, const UserId&) = default;

 private:
  std::string value_;
};

class ForumId {
 public:
  ForumId() = default;
  explicit ForumId(std::string_view text);

  const std::string& value() const { return value_; }

  friend auto operator<=>(const ForumId&, const ForumId&) = default;
  friend bool operator==(const ForumId&, const ForumId&) = default;

 private:
  std::string value_;
};

enum class TrustLabel : std::uint8_t { kTrust, kNeutralTrust, kMistrust };
enum class SentimentLabel : std::uint8_t {
  kPositive,
  kNegative,
  kNeutralSentiment,
  kUnrelated,
};

inline constexpr std::array<TrustLabel, 3> kTrustLabels = {
    TrustLabel::kTrust, TrustLabel::kNeutralTrust, TrustLabel::kMistrust};
inline constexpr std::array<SentimentLabel, 4> kSentimentLabels = {
    SentimentLabel::kPositive, SentimentLabel::kNegative,
    SentimentLabel::kNeutralSentiment, SentimentLabel::kUnrelated};

// Case-insensitive, whitespace-trimmed. Throws Error(kUnknownLabel) whose
// detail is the offending token as given.
TrustLabel ParseTrustLabel(std::string_view text);
SentimentLabel ParseSentimentLabel(std::string_view text);

// Canonical lowercase serialization tokens.
std::string_view ToToken(TrustLabel label);
std::string_view ToToken(SentimentLabel label);

struct InteractionRecord {
  ForumId forum;
  std::string post_id;
  UserId from;
  UserId to;
  std::int64_t timestamp = 0;  // UTC seconds
  TrustLabel trust = TrustLabel::kNeutralTrust;
  SentimentLabel sentiment = SentimentLabel::kNeutralSentiment;

  friend bool operator==(const InteractionRecord&,
                         const InteractionRecord&) = default;
};

// Canonical per-forum order: (timestamp, post_id, from, to).
bool RecordLess(const InteractionRecord& a, const InteractionRecord& b);

// Fields as they arrive from a file, before any identifier checks.
struct RawRecord {
  std::string forum;
  std::string post_id;
  std::string from;
  std::string to;
  std::int64_t timestamp = 0;
  TrustLabel trust = TrustLabel::kNeutralTrust;
  SentimentLabel sentiment = SentimentLabel::kNeutralSentiment;
};

// Throws Error with kind kEmptyField (detail = field name), kInvalidIdentifier,
// kNegativeTimestamp or kSelfInteraction (detail = user id).
InteractionRecord ValidateRecord(const RawRecord& candidate);

// Trims ASCII whitespace from both ends.
std::string_view Trim(std::string_view text);

}  // namespace forummatrix

template <>
struct std::hash<forummatrix::UserId> {
  std::size_t operator()(const forummatrix::UserId& id) const noexcept {
    return std::hash<std::string>{}(id.value());
  }
};

#endif  // FORUMMATRIX_INTERACTION_H_
