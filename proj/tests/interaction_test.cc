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
#include <random>
#include <string>

#include "forummatrix/error.h"
#include "gtest/gtest.h"

namespace forummatrix {
namespace {

ErrorKind KindOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::kInvalidArgument;
}

TEST(ParseTrustLabelTest, AcceptsTaxonomyWords) {
  EXPECT_EQ(ParseTrustLabel("trust"), TrustLabel::kTrust);
  EXPECT_EQ(ParseTrustLabel("neutral"), TrustLabel::kNeutralTrust);
  EXPECT_EQ(ParseTrustLabel("mistrust"), TrustLabel::kMistrust);
}

TEST(ParseTrustLabelTest, NormalizesCaseAndWhitespace) {
  EXPECT_EQ(ParseTrustLabel(" MISTRUST "), TrustLabel::kMistrust);
  EXPECT_EQ(ParseTrustLabel("\tTrust\r"), TrustLabel::kTrust);
}

TEST(ParseTrustLabelTest, UnknownTokenCarriesToken) {
  try {
    ParseTrustLabel("friendly");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnknownLabel);
    EXPECT_EQ(e.detail(), "friendly");
    EXPECT_EQ(e.token(), "unknown_label");
  }
}

TEST(ParseSentimentLabelTest, Examples) {
  EXPECT_EQ(ParseSentimentLabel("unrelated"), SentimentLabel::kUnrelated);
  EXPECT_EQ(ParseSentimentLabel("Neutral"), SentimentLabel::kNeutralSentiment);
  EXPECT_EQ(ParseSentimentLabel("positive"), SentimentLabel::kPositive);
  EXPECT_EQ(ParseSentimentLabel("NEGATIVE"), SentimentLabel::kNegative);
  try {
    ParseSentimentLabel("");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnknownLabel);
    EXPECT_EQ(e.detail(), "");
  }
}

// Parsing succeeds exactly for the canonical words after trim + lowercase.
TEST(LabelPropertyTest, AcceptanceMatchesNormalizedMembership) {
  std::mt19937_64 rng(11);
  const std::string alphabet = "trusmiNeoalpgvdTRUS \t";
  const std::vector<std::string> seeds = {"trust", "neutral", "mistrust",
                                          "positive", "negative", "unrelated"};
  for (int i = 0; i < 5000; ++i) {
    std::string text;
    if (i % 3 == 0) {
      text = seeds[rng() % seeds.size()];
      for (auto& c : text)
        if (rng() % 2) c = static_cast<char>(std::toupper(c));
      text = std::string(rng() % 3, ' ') + text + std::string(rng() % 3, '\t');
    } else {
      const std::size_t len = rng() % 9;
      for (std::size_t k = 0; k < len; ++k) text += alphabet[rng() % alphabet.size()];
    }
    std::string norm(Trim(text));
    std::transform(norm.begin(), norm.end(), norm.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    const bool trust_member =
        norm == "trust" || norm == "neutral" || norm == "mistrust";
    const bool sentiment_member = norm == "positive" || norm == "negative" ||
                                  norm == "neutral" || norm == "unrelated";
    bool trust_ok = true, sentiment_ok = true;
    try {
      ParseTrustLabel(text);
    } catch (const Error&) {
      trust_ok = false;
    }
    try {
      ParseSentimentLabel(text);
    } catch (const Error&) {
      sentiment_ok = false;
    }
    EXPECT_EQ(trust_ok, trust_member) << "'" << text << "'";
    EXPECT_EQ(sentiment_ok, sentiment_member) << "'" << text << "'";
  }
}

TEST(LabelPropertyTest, TokenRoundTrip) {
  for (TrustLabel label : kTrustLabels) {
    EXPECT_EQ(ParseTrustLabel(ToToken(label)), label);
  }
  for (SentimentLabel label : kSentimentLabels) {
    EXPECT_EQ(ParseSentimentLabel(ToToken(label)), label);
  }
}

RawRecord Raw(std::string from, std::string to, std::int64_t t = 100) {
  RawRecord r;
  r.forum = "f1";
  r.post_id = "p1";
  r.from = std::move(from);
  r.to = std::move(to);
  r.timestamp = t;
  r.trust = TrustLabel::kTrust;
  r.sentiment = SentimentLabel::kPositive;
  return r;
}

TEST(ValidateRecordTest, WellFormed) {
  const InteractionRecord r = ValidateRecord(Raw("A", "B"));
  EXPECT_EQ(r.forum.value(), "f1");
  EXPECT_EQ(r.from.value(), "A");
  EXPECT_EQ(r.to.value(), "B");
  EXPECT_EQ(r.timestamp, 100);
}

TEST(ValidateRecordTest, SelfInteractionNamesUser) {
  try {
    ValidateRecord(Raw("A", "A"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kSelfInteraction);
    EXPECT_EQ(e.detail(), "A");
  }
  // Trimming happens before the comparison.
  EXPECT_EQ(KindOf([] { ValidateRecord(Raw("A", " A ")); }),
            ErrorKind::kSelfInteraction);
}

TEST(ValidateRecordTest, EmptyFieldsNameTheField) {
  try {
    ValidateRecord(Raw("", "B"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kEmptyField);
    EXPECT_EQ(e.detail(), "from");
  }
  RawRecord r = Raw("A", "B");
  r.post_id = "  ";
  try {
    ValidateRecord(r);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.detail(), "post_id");
  }
  r = Raw("A", "");
  EXPECT_EQ(KindOf([&] { ValidateRecord(r); }), ErrorKind::kEmptyField);
}

TEST(ValidateRecordTest, RejectsNegativeTimestampAndBadCharacters) {
  EXPECT_EQ(KindOf([] { ValidateRecord(Raw("A", "B", -1)); }),
            ErrorKind::kNegativeTimestamp);
  EXPECT_EQ(KindOf([] { ValidateRecord(Raw("A,x", "B")); }),
            ErrorKind::kInvalidIdentifier);
  EXPECT_EQ(KindOf([] { ValidateRecord(Raw("A\x01", "B")); }),
            ErrorKind::kInvalidIdentifier);
  EXPECT_EQ(KindOf([] { ValidateRecord(Raw("A\nB", "C")); }),
            ErrorKind::kInvalidIdentifier);
}

TEST(ValidateRecordTest, NeverReturnsSelfLoop) {
  std::mt19937_64 rng(3);
  const std::vector<std::string> pool = {"A", "B", " A", "a", "", "C "};
  for (int i = 0; i < 2000; ++i) {
    try {
      const auto r = ValidateRecord(Raw(pool[rng() % pool.size()],
                                        pool[rng() % pool.size()],
                                        static_cast<std::int64_t>(rng() % 5) - 1));
      EXPECT_NE(r.from, r.to);
    } catch (const Error&) {
    }
  }
}

TEST(UserIdTest, TrimsAndIsCaseSensitive) {
  EXPECT_EQ(UserId("  bob ").value(), "bob");
  EXPECT_NE(UserId("Bob"), UserId("bob"));
}

}  // namespace
}  // namespace forummatrix
