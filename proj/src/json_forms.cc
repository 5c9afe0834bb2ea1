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

#include "forummatrix/json_forms.h"

#include <charconv>
#include <cmath>

#include "json.hpp"

namespace forummatrix {
namespace {

// Appends compact JSON. Callers keep keys and values paired; the writer
// only tracks where commas go.
class JsonWriter {
 public:
  JsonWriter& BeginObject() { return Open('{'); }
  JsonWriter& EndObject() { return Close('}'); }
  JsonWriter& BeginArray() { return Open('['); }
  JsonWriter& EndArray() { return Close(']'); }

  JsonWriter& Key(std::string_view key) {
    Separate();
    AppendString(key);
    out_.push_back(':');
    after_key_ = true;
    return *this;
  }

  JsonWriter& String(std::string_view value) {
    Separate();
    AppendString(value);
    return *this;
  }
  JsonWriter& Int(std::int64_t value) {
    Separate();
    out_ += std::to_string(value);
    return *this;
  }
  JsonWriter& Real(double value) {
    Separate();
    out_ += FormatReal(value);
    return *this;
  }
  JsonWriter& Bool(bool value) {
    Separate();
    out_ += value ? "true" : "false";
    return *this;
  }

  std::string Finish() { return std::move(out_); }

 private:
  JsonWriter& Open(char c) {
    Separate();
    out_.push_back(c);
    first_ = true;
    return *this;
  }
  JsonWriter& Close(char c) {
    out_.push_back(c);
    first_ = false;
    return *this;
  }
  void Separate() {
    if (after_key_) {
      after_key_ = false;
      return;
    }
    if (!first_) out_.push_back(',');
    first_ = false;
  }
  void AppendString(std::string_view text) {
    out_ += nlohmann::json(std::string(text))
                .dump(-1, ' ', false,
                      nlohmann::json::error_handler_t::replace);
  }

  std::string out_;
  bool first_ = true;
  bool after_key_ = false;
};

void WriteScanLines(JsonWriter& w, const std::vector<ScanLine>& lines) {
  w.BeginArray();
  for (const auto& line : lines) {
    w.BeginArray().String(line.user.value()).Real(line.fraction).EndArray();
  }
  w.EndArray();
}

}  // namespace

std::string FormatReal(double value) {
  if (!std::isfinite(value)) return "null";
  // to_chars rounds the exact binary value, ties to even.
  char buffer[64];
  auto result = std::to_chars(buffer, buffer + sizeof(buffer), value,
                              std::chars_format::fixed, 6);
  std::string text(buffer, result.ptr);
  if (text == "-0.000000") text.erase(0, 1);
  return text;
}

std::string MatrixToJson(const InteractionMatrix& matrix) {
  JsonWriter w;
  w.BeginObject();
  w.Key("forum_id").String(matrix.forum().value());
  w.Key("ordering").String(ToToken(matrix.ordering()));
  w.Key("users").BeginArray();
  for (const auto& user : matrix.users()) w.String(user.value());
  w.EndArray();
  w.Key("total_count").Int(matrix.total_count());
  w.Key("cells").BeginArray();
  for (const Cell& cell : matrix.cells()) {
    const CellAggregate& a = cell.aggregate;
    w.BeginObject();
    w.Key("from").Int(static_cast<std::int64_t>(cell.from));
    w.Key("to").Int(static_cast<std::int64_t>(cell.to));
    w.Key("count").Int(a.count);
    w.Key("trust").BeginObject();
    for (TrustLabel label : kTrustLabels) {
      w.Key(ToToken(label)).Int(a.trust_counts[static_cast<std::size_t>(label)]);
    }
    w.EndObject();
    w.Key("sentiment").BeginObject();
    for (SentimentLabel label : kSentimentLabels) {
      w.Key(ToToken(label))
          .Int(a.sentiment_counts[static_cast<std::size_t>(label)]);
    }
    w.EndObject();
    w.Key("dominant_trust").String(ToToken(a.dominant_trust));
    w.Key("dominant_sentiment").String(ToToken(a.dominant_sentiment));
    w.EndObject();
  }
  w.EndArray();
  w.EndObject();
  return w.Finish();
}

std::string PatternReportToJson(const PatternReport& report) {
  JsonWriter w;
  w.BeginObject();
  w.Key("forum_id").String(report.forum.value());
  w.Key("n_users").Int(report.n_users);
  w.Key("symmetry").BeginObject();
  w.Key("cosine").Real(report.symmetry.cosine_symmetry);
  w.Key("dyad_reciprocity").Real(report.symmetry.dyad_reciprocity);
  w.EndObject();
  w.Key("scan_lines").BeginObject();
  w.Key("alpha").Real(report.scan_lines.alpha);
  w.Key("rows");
  WriteScanLines(w, report.scan_lines.row_lines);
  w.Key("cols");
  WriteScanLines(w, report.scan_lines.column_lines);
  w.EndObject();
  w.Key("dispersion").BeginObject();
  w.Key("density").Real(report.dispersion.density);
  w.Key("cell_gini").Real(report.dispersion.cell_gini);
  w.Key("top2_share").Real(report.dispersion.top2_share);
  w.Key("top2_informative").Bool(report.dispersion.top2_informative);
  w.EndObject();
  w.Key("classification").String(ToToken(report.classification));
  w.Key("thresholds").BeginObject();
  w.Key("alpha").Real(report.thresholds.alpha);
  w.Key("scan_min_users").Int(report.thresholds.scan_min_users);
  w.Key("tau_share").Real(report.thresholds.tau_share);
  w.Key("min_users").Int(report.thresholds.min_users);
  w.EndObject();
  w.EndObject();
  return w.Finish();
}

std::string ForumListToJson(const std::vector<ForumMeta>& forums) {
  JsonWriter w;
  w.BeginArray();
  for (const auto& f : forums) {
    w.BeginObject();
    w.Key("id").String(f.id.value());
    w.Key("name").String(f.display_name);
    w.Key("user_count").Int(f.user_count);
    w.Key("interaction_count").Int(f.interaction_count);
    w.EndObject();
  }
  w.EndArray();
  return w.Finish();
}

std::string IngestReportToJson(const IngestReport& report) {
  JsonWriter w;
  w.BeginObject();
  w.Key("accepted").Int(static_cast<std::int64_t>(report.accepted));
  w.Key("rejected").BeginArray();
  for (const auto& r : report.rejected) {
    w.BeginObject();
    w.Key("line").Int(static_cast<std::int64_t>(r.line));
    w.Key("error").String(r.error.token());
    w.Key("detail").String(r.error.detail());
    w.Key("message").String(r.error.what());
    w.EndObject();
  }
  w.EndArray();
  w.Key("forums_seen").Int(static_cast<std::int64_t>(report.forums_seen));
  w.Key("users_seen").Int(static_cast<std::int64_t>(report.users_seen));
  w.EndObject();
  return w.Finish();
}

std::string ErrorToJson(
    std::string_view token, std::string_view message,
    const std::vector<std::pair<std::string, std::int64_t>>& extra) {
  JsonWriter w;
  w.BeginObject();
  w.Key("error").String(token);
  for (const auto& [key, value] : extra) w.Key(key).Int(value);
  w.Key("message").String(message);
  w.EndObject();
  return w.Finish();
}

}  // namespace forummatrix
