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

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <utility>

namespace forummatrix {
namespace {

// mt19937_64 output is fully specified by the standard; the distributions
// are not, so bounded draws are done here to keep fixtures portable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, n).
  std::uint64_t Below(std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  // Uniform in [0, 1).
  double Unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[Below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

std::string Numbered(std::string_view prefix, int value, int width) {
  std::string digits = std::to_string(value);
  if (static_cast<int>(digits.size()) < width) {
    digits.insert(0, static_cast<std::size_t>(width) - digits.size(), '0');
  }
  return std::string(prefix) + digits;
}

int Digits(int n) { return n < 10 ? 1 : 1 + Digits(n / 10); }

std::int64_t ForumCapacity(std::int64_t users) {
  return users * (users - 1) * kMaxPairMultiplicity;
}

std::int64_t CoverageNeed(std::int64_t users) { return (users + 1) / 2; }

// Splits `total` into `parts.size()` shares starting from the given minimum
// per part, proportionally to `weights`, never above `caps`. Leftovers go
// round-robin to parts with room.
std::vector<std::int64_t> Apportion(std::int64_t total,
                                    const std::vector<std::int64_t>& minimum,
                                    const std::vector<double>& weights,
                                    const std::vector<std::int64_t>& caps) {
  const std::size_t n = minimum.size();
  std::vector<std::int64_t> out = minimum;
  const std::int64_t base = std::accumulate(minimum.begin(), minimum.end(),
                                            std::int64_t{0});
  const std::int64_t rest = total - base;
  const double weight_sum =
      std::accumulate(weights.begin(), weights.end(), 0.0);
  std::int64_t assigned = base;
  for (std::size_t i = 0; i < n; ++i) {
    auto share = static_cast<std::int64_t>(
        static_cast<double>(rest) * weights[i] / weight_sum);
    share = std::min(share, caps[i] - out[i]);
    share = std::min(share, total - assigned);
    out[i] += share;
    assigned += share;
  }
  for (std::size_t i = 0; assigned < total; i = (i + 1) % n) {
    if (out[i] < caps[i]) {
      ++out[i];
      ++assigned;
    }
  }
  return out;
}

TrustLabel DrawTrust(Rng& rng) {
  const double u = rng.Unit();
  if (u < 0.5) return TrustLabel::kTrust;
  if (u < 0.85) return TrustLabel::kNeutralTrust;
  return TrustLabel::kMistrust;
}

SentimentLabel DrawSentiment(Rng& rng) {
  const double u = rng.Unit();
  if (u < 0.4) return SentimentLabel::kPositive;
  if (u < 0.55) return SentimentLabel::kNegative;
  if (u < 0.85) return SentimentLabel::kNeutralSentiment;
  return SentimentLabel::kUnrelated;
}

// Emits the records of one forum. Users are indices into `users`.
class ForumBuilder {
 public:
  ForumBuilder(const ForumId& forum, int forum_index,
               const std::vector<UserId>& users, std::int64_t budget,
               Rng& rng, std::vector<InteractionRecord>& out)
      : forum_(forum),
        forum_index_(forum_index),
        users_(users),
        budget_(budget),
        rng_(rng),
        out_(out),
        clock_(1262304000 + static_cast<std::int64_t>(forum_index) * 86400) {}

  std::int64_t remaining() const { return budget_ - emitted_; }

  bool TryEmit(std::size_t from, std::size_t to) {
    if (remaining() <= 0 || from == to) return false;
    auto& used = multiplicity_[{from, to}];
    if (used >= kMaxPairMultiplicity) return false;
    ++used;
    clock_ += 1 + static_cast<std::int64_t>(rng_.Below(600));
    InteractionRecord record;
    record.forum = forum_;
    record.post_id = "p" + std::to_string(forum_index_) + "-" +
                     std::to_string(emitted_ + 1);
    record.from = users_[from];
    record.to = users_[to];
    record.timestamp = clock_;
    record.trust = DrawTrust(rng_);
    record.sentiment = DrawSentiment(rng_);
    out_.push_back(std::move(record));
    ++emitted_;
    return true;
  }

  // First free ordered pair in row-major order. Capacity was checked up
  // front, so one exists while budget remains.
  void EmitAnyFree() {
    const std::size_t n = users_.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (TryEmit(i, j)) return;
      }
    }
  }

  void EmitRandomPair() {
    const std::size_t n = users_.size();
    for (int attempt = 0; attempt < 64; ++attempt) {
      const std::size_t a = rng_.Below(n);
      const std::size_t b = (a + 1 + rng_.Below(n - 1)) % n;
      if (TryEmit(a, b)) return;
    }
    EmitAnyFree();
  }

  // Pairs users 0-1, 2-3, ... in shuffled order so every user appears once;
  // an odd user out is paired with the first.
  std::vector<std::pair<std::size_t, std::size_t>> Matching() {
    std::vector<std::size_t> order(users_.size());
    std::iota(order.begin(), order.end(), 0);
    rng_.Shuffle(order);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i + 1 < order.size(); i += 2) {
      pairs.emplace_back(order[i], order[i + 1]);
    }
    if (order.size() % 2 == 1) pairs.emplace_back(order.back(), order.front());
    return pairs;
  }

  void LeaderDominated() {
    const std::size_t n = users_.size();
    // Leaders are users 0 and 1 of this forum's list.
    if (remaining() >= static_cast<std::int64_t>(n) - 1) {
      TryEmit(0, 1);
      for (std::size_t u = 2; u < n; ++u) {
        const std::size_t leader = rng_.Below(2);
        if (rng_.Below(2) == 0) {
          TryEmit(leader, u);
        } else {
          TryEmit(u, leader);
        }
      }
    } else {
      for (auto [a, b] : Matching()) TryEmit(a, b);
    }
    while (remaining() > 0) {
      if (rng_.Unit() < kLeaderTouchProbability) {
        bool done = false;
        for (int attempt = 0; attempt < 64 && !done; ++attempt) {
          const std::size_t leader = rng_.Below(2);
          const std::size_t other = (leader + 1 + rng_.Below(n - 1)) % n;
          done = rng_.Below(2) == 0 ? TryEmit(leader, other)
                                    : TryEmit(other, leader);
        }
        if (!done) EmitAnyFree();
      } else {
        EmitRandomPair();
      }
    }
  }

  void Dispersed() {
    for (auto [a, b] : Matching()) TryEmit(a, b);
    while (remaining() > 0) EmitRandomPair();
  }

  void Reciprocal() {
    const auto matching = Matching();
    for (auto [a, b] : matching) TryEmit(a, b);
    for (auto [a, b] : matching) TryEmit(b, a);
    const std::size_t n = users_.size();
    while (remaining() > 0) {
      bool done = false;
      for (int attempt = 0; attempt < 64 && !done; ++attempt) {
        const std::size_t a = rng_.Below(n);
        const std::size_t b = (a + 1 + rng_.Below(n - 1)) % n;
        if (multiplicity_[{a, b}] < kMaxPairMultiplicity &&
            multiplicity_[{b, a}] < kMaxPairMultiplicity) {
          TryEmit(a, b);
          TryEmit(b, a);  // the last odd record stays one-directional
          done = true;
        }
      }
      if (!done) EmitAnyFree();
    }
  }

 private:
  ForumId forum_;
  int forum_index_;
  const std::vector<UserId>& users_;
  std::int64_t budget_;
  Rng& rng_;
  std::vector<InteractionRecord>& out_;
  std::int64_t clock_;
  std::int64_t emitted_ = 0;
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> multiplicity_;
};

}  // namespace

Regime ParseRegime(std::string_view token) {
  if (token == "leader_dominated") return Regime::kLeaderDominated;
  if (token == "dispersed") return Regime::kDispersed;
  if (token == "reciprocal") return Regime::kReciprocal;
  throw Error(ErrorKind::kInvalidArgument, std::string(token),
              "unknown regime '" + std::string(token) + "'");
}

std::string_view ToToken(Regime regime) {
  switch (regime) {
    case Regime::kLeaderDominated: return "leader_dominated";
    case Regime::kDispersed: return "dispersed";
    case Regime::kReciprocal: return "reciprocal";
  }
  return "dispersed";
}

DatasetSnapshot GenerateFixture(const FixtureSpec& spec) {
  auto infeasible = [](const std::string& why) {
    return Error(ErrorKind::kInfeasibleSpec, why, "infeasible fixture: " + why);
  };
  if (spec.forum_count < 1 || spec.interaction_count < 1) {
    throw infeasible("counts must be positive");
  }
  if (spec.user_count < 2) throw infeasible("user_count < 2");
  if (spec.regimes.empty()) throw infeasible("no regime given");
  const auto forums = static_cast<std::size_t>(spec.forum_count);
  if (spec.user_count < 2 * spec.forum_count) {
    throw infeasible("fewer than two users per forum");
  }

  Rng rng(spec.seed);

  // Users per forum.
  std::vector<double> weights(forums);
  for (auto& w : weights) w = 0.5 + rng.Unit();
  const std::vector<std::int64_t> user_caps(forums, spec.user_count);
  const auto sizes = Apportion(spec.user_count,
                               std::vector<std::int64_t>(forums, 2), weights,
                               user_caps);

  // Interactions per forum.
  std::vector<std::int64_t> need(forums), caps(forums);
  std::vector<double> size_weights(forums);
  std::int64_t need_total = 0, cap_total = 0;
  for (std::size_t f = 0; f < forums; ++f) {
    need[f] = CoverageNeed(sizes[f]);
    caps[f] = ForumCapacity(sizes[f]);
    size_weights[f] = static_cast<double>(sizes[f]);
    need_total += need[f];
    cap_total += caps[f];
  }
  if (spec.interaction_count < need_total) {
    throw infeasible("interaction_count " +
                     std::to_string(spec.interaction_count) +
                     " cannot cover every user (needs " +
                     std::to_string(need_total) + ")");
  }
  if (spec.interaction_count > cap_total) {
    throw infeasible("interaction_count " +
                     std::to_string(spec.interaction_count) +
                     " exceeds pair capacity " + std::to_string(cap_total));
  }
  const auto budgets =
      Apportion(spec.interaction_count, need, size_weights, caps);

  const int forum_width = std::max(3, Digits(spec.forum_count));
  const int user_width = std::max(4, Digits(spec.user_count));
  std::vector<InteractionRecord> records;
  records.reserve(static_cast<std::size_t>(spec.interaction_count));
  std::map<ForumId, std::string> names;
  int next_user = 1;
  for (std::size_t f = 0; f < forums; ++f) {
    const int number = static_cast<int>(f) + 1;
    const ForumId forum(Numbered("forum-", number, forum_width));
    names.emplace(forum, Numbered("Forum ", number, forum_width));
    std::vector<UserId> users;
    for (std::int64_t u = 0; u < sizes[f]; ++u) {
      users.emplace_back(Numbered("user-", next_user++, user_width));
    }
    rng.Shuffle(users);
    ForumBuilder builder(forum, number, users, budgets[f], rng, records);
    switch (spec.regimes[f % spec.regimes.size()]) {
      case Regime::kLeaderDominated: builder.LeaderDominated(); break;
      case Regime::kDispersed: builder.Dispersed(); break;
      case Regime::kReciprocal: builder.Reciprocal(); break;
    }
  }
  return DatasetSnapshot::Build(std::move(records), names);
}

}  // namespace forummatrix
