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

#include "forummatrix/render.h"

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>
#include <vector>

namespace forummatrix {
namespace {

constexpr int kMargin = 10;
constexpr int kCharPx = 7;  // width estimate for 11px sans-serif
constexpr int kFontPx = 11;
constexpr std::size_t kMaxLabelChars = 24;
constexpr int kLegendGap = 20;
constexpr int kSwatchPx = 12;
constexpr int kLegendRowPx = 16;
constexpr const char* kGridStroke = "#d9d9d9";

struct Rgb {
  int r, g, b;
};

constexpr std::array<Rgb, 8> kHeatRamp = {{{0xff, 0xff, 0xcc},
                                           {0xff, 0xed, 0xa0},
                                           {0xfe, 0xd9, 0x76},
                                           {0xfe, 0xb2, 0x4c},
                                           {0xfd, 0x8d, 0x3c},
                                           {0xfc, 0x4e, 0x2a},
                                           {0xe3, 0x1a, 0x1c},
                                           {0xb1, 0x00, 0x26}}};
constexpr std::array<Rgb, 2> kGrayRamp = {{{0xf0, 0xf0, 0xf0},
                                           {0x25, 0x25, 0x25}}};

std::string Hex(Rgb c) {
  char buffer[8];
  std::snprintf(buffer, sizeof(buffer), "#%02x%02x%02x", c.r, c.g, c.b);
  return buffer;
}

// Piecewise-linear position t in [0, 1] along the anchors, in integer
// arithmetic over a 1/65536 grid so every platform picks the same bytes.
template <std::size_t N>
Rgb Interpolate(const std::array<Rgb, N>& anchors, int step, int steps) {
  if (steps <= 0) return anchors.back();
  const long long scaled = static_cast<long long>(step) * (N - 1) * 65536 / steps;
  const std::size_t seg =
      std::min<std::size_t>(static_cast<std::size_t>(scaled / 65536), N - 2);
  const long long frac = scaled - static_cast<long long>(seg) * 65536;
  auto mix = [frac](int a, int b) {
    return static_cast<int>((a * 65536LL + (b - a) * frac + 32768) / 65536);
  };
  const Rgb& lo = anchors[seg];
  const Rgb& hi = anchors[seg + 1];
  return {mix(lo.r, hi.r), mix(lo.g, hi.g), mix(lo.b, hi.b)};
}

std::string EscapeXml(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

// Truncates on a UTF-8 boundary.
std::string ShortLabel(const std::string& text) {
  if (text.size() <= kMaxLabelChars) return text;
  std::size_t cut = kMaxLabelChars - 3;
  while (cut > 0 && (static_cast<unsigned char>(text[cut]) & 0xC0) == 0x80) {
    --cut;
  }
  return text.substr(0, cut) + "...";
}

struct LegendEntry {
  std::string fill;
  std::string label;
};

std::vector<LegendEntry> LegendEntries(const RenderSpec& spec,
                                       const LegendScale& scale) {
  std::vector<LegendEntry> entries;
  if (const auto* buckets = std::get_if<ColorScale>(&scale)) {
    if (spec.layer != Layer::kFrequency) {
      throw Error(ErrorKind::kLayerScaleMismatch, std::string(ToToken(spec.layer)),
                  "frequency scale supplied for a categorical layer");
    }
    const auto labels = buckets->legend_labels();
    for (int b = 0; b < buckets->used_buckets(); ++b) {
      entries.push_back({FrequencyColor(spec.palette, b, buckets->bucket_count()),
                         labels[static_cast<std::size_t>(b)]});
    }
    return entries;
  }
  const auto& categories = std::get<CategoricalScale>(scale);
  if (categories.layer != spec.layer || spec.layer == Layer::kFrequency) {
    throw Error(ErrorKind::kLayerScaleMismatch, std::string(ToToken(spec.layer)),
                "category set '" + std::string(ToToken(categories.layer)) +
                    "' does not match layer '" +
                    std::string(ToToken(spec.layer)) + "'");
  }
  if (spec.layer == Layer::kTrust) {
    for (TrustLabel label : kTrustLabels) {
      entries.push_back({std::string(LabelColor(label)),
                         std::string(ToToken(label))});
    }
  } else {
    for (SentimentLabel label : kSentimentLabels) {
      entries.push_back({std::string(LabelColor(label)),
                         std::string(ToToken(label))});
    }
  }
  return entries;
}

std::string_view LegendTitle(Layer layer) {
  switch (layer) {
    case Layer::kFrequency: return "interactions";
    case Layer::kTrust: return "trust";
    case Layer::kSentiment: return "sentiment";
  }
  return "";
}

int LegendWidth(const std::vector<LegendEntry>& entries, Layer layer) {
  std::size_t chars = LegendTitle(layer).size();
  for (const auto& e : entries) {
    chars = std::max(chars, e.label.size() + 3);  // swatch + gap
  }
  return static_cast<int>(chars) * kCharPx;
}

int LegendHeight(const std::vector<LegendEntry>& entries) {
  return kLegendRowPx * static_cast<int>(entries.size() + 1);
}

std::string CellFill(const CellAggregate& cell, const RenderSpec& spec,
                     const ColorScale& scale) {
  switch (spec.layer) {
    case Layer::kFrequency:
      return FrequencyColor(spec.palette, scale.bucket(cell.count),
                            scale.bucket_count());
    case Layer::kTrust: return std::string(LabelColor(cell.dominant_trust));
    case Layer::kSentiment:
      return std::string(LabelColor(cell.dominant_sentiment));
  }
  return "none";
}

}  // namespace

std::string_view ToToken(Layer layer) {
  switch (layer) {
    case Layer::kFrequency: return "frequency";
    case Layer::kTrust: return "trust";
    case Layer::kSentiment: return "sentiment";
  }
  return "frequency";
}

Layer ParseLayer(std::string_view token) {
  if (token == "frequency") return Layer::kFrequency;
  if (token == "trust") return Layer::kTrust;
  if (token == "sentiment") return Layer::kSentiment;
  throw Error(ErrorKind::kInvalidArgument, std::string(token),
              "unknown layer '" + std::string(token) + "'");
}

std::string_view ToToken(FrequencyPalette palette) {
  return palette == FrequencyPalette::kGray ? "gray" : "heat";
}

FrequencyPalette ParsePalette(std::string_view token) {
  if (token == "heat") return FrequencyPalette::kHeat;
  if (token == "gray") return FrequencyPalette::kGray;
  throw Error(ErrorKind::kInvalidArgument, std::string(token),
              "unknown palette '" + std::string(token) + "'");
}

void RenderSpec::Validate() const {
  if (cell_px < 4) {
    throw Error(ErrorKind::kInvalidArgument, "cell_px",
                "cell_px must be at least 4");
  }
  if (max_render_users < 2) {
    throw Error(ErrorKind::kInvalidArgument, "max_render_users",
                "max_render_users must be at least 2");
  }
  if (bucket_count < 2) {
    throw Error(ErrorKind::kInvalidArgument, "bucket_count",
                "bucket_count must be at least 2");
  }
}

std::string FrequencyColor(FrequencyPalette palette, int bucket,
                           int bucket_count) {
  if (bucket <= 0) return "#ffffff";
  const int steps = bucket_count - 2;  // buckets 1..bucket_count-1
  const int step = std::min(bucket - 1, std::max(steps, 0));
  if (palette == FrequencyPalette::kGray) {
    return Hex(Interpolate(kGrayRamp, step, steps));
  }
  return Hex(Interpolate(kHeatRamp, step, steps));
}

std::string_view LabelColor(TrustLabel label) {
  switch (label) {
    case TrustLabel::kTrust: return "#2ca02c";
    case TrustLabel::kNeutralTrust: return "#9e9e9e";
    case TrustLabel::kMistrust: return "#d62728";
  }
  return "#9e9e9e";
}

std::string_view LabelColor(SentimentLabel label) {
  switch (label) {
    case SentimentLabel::kPositive: return "#2ca02c";
    case SentimentLabel::kNegative: return "#d62728";
    case SentimentLabel::kNeutralSentiment: return "#9e9e9e";
    case SentimentLabel::kUnrelated: return "#1f77b4";
  }
  return "#9e9e9e";
}

std::string RenderLegend(const RenderSpec& spec, const LegendScale& scale,
                         int x, int y) {
  const auto entries = LegendEntries(spec, scale);
  std::string out = "<g class=\"legend\" data-layer=\"" +
                    std::string(ToToken(spec.layer)) + "\" transform=\"translate(" +
                    std::to_string(x) + "," + std::to_string(y) + ")\">\n";
  out += "<text class=\"legend-title\" x=\"0\" y=\"" +
         std::to_string(kLegendRowPx - 4) + "\">" +
         std::string(LegendTitle(spec.layer)) + "</text>\n";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const int row = kLegendRowPx * static_cast<int>(i + 1);
    out += "<rect class=\"swatch\" x=\"0\" y=\"" + std::to_string(row + 2) +
           "\" width=\"" + std::to_string(kSwatchPx) + "\" height=\"" +
           std::to_string(kSwatchPx) + "\" fill=\"" + entries[i].fill +
           "\" stroke=\"#808080\" stroke-width=\"0.5\"/>\n";
    out += "<text class=\"swatch-label\" x=\"" +
           std::to_string(kSwatchPx + 6) + "\" y=\"" +
           std::to_string(row + kSwatchPx) + "\">" +
           EscapeXml(entries[i].label) + "</text>\n";
  }
  out += "</g>\n";
  return out;
}

SvgDocument RenderMatrixSvg(const InteractionMatrix& matrix,
                            const RenderSpec& spec) {
  spec.Validate();
  if (matrix.total_count() == 0) {
    throw Error(ErrorKind::kEmptyMatrix, matrix.forum().value(),
                "matrix has no interactions");
  }
  const std::size_t n = matrix.size();
  if (n > static_cast<std::size_t>(spec.max_render_users)) {
    throw Error(ErrorKind::kTooManyUsers, std::to_string(n),
                std::to_string(n) + " users exceed the render cap of " +
                    std::to_string(spec.max_render_users));
  }

  const ColorScale scale = MakeColorScale(matrix.max_count(), spec.bucket_count);
  LegendScale legend_scale = scale;
  if (spec.layer != Layer::kFrequency) legend_scale = CategoricalScale{spec.layer};

  std::vector<std::string> labels;
  std::size_t label_chars = 0;
  for (const auto& user : matrix.users()) {
    labels.push_back(ShortLabel(user.value()));
    label_chars = std::max(label_chars, labels.back().size());
  }
  const int cell = spec.cell_px;
  const int label_space =
      spec.show_labels ? 8 + kCharPx * static_cast<int>(label_chars) : 0;
  const int grid_x = kMargin + label_space;
  const int grid_y = kMargin + label_space;
  const int grid = cell * static_cast<int>(n);

  int width = grid_x + grid + kMargin;
  int height = grid_y + grid + kMargin;
  const int legend_x = grid_x + grid + kLegendGap;
  std::vector<LegendEntry> entries;
  if (spec.show_legend) {
    entries = LegendEntries(spec, legend_scale);
    width = legend_x + LegendWidth(entries, spec.layer) + kMargin;
    height = std::max(height, grid_y + LegendHeight(entries) + kMargin);
  }

  std::string out;
  out.reserve(256 + n * n * 96);
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" viewBox=\"0 0 " + std::to_string(width) + " " +
         std::to_string(height) +
         "\" font-family=\"sans-serif\" font-size=\"" +
         std::to_string(kFontPx) + "\">\n";
  out += "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" fill=\"#ffffff\"/>\n";
  out += "<g class=\"grid\" data-forum=\"" + EscapeXml(matrix.forum().value()) +
         "\" data-layer=\"" + std::string(ToToken(spec.layer)) +
         "\" data-users=\"" + std::to_string(n) + "\">\n";

  const std::string size_attrs = "\" width=\"" + std::to_string(cell) +
                                 "\" height=\"" + std::to_string(cell) + "\"";
  const std::string glyph_px = std::to_string(std::max(4, cell * 3 / 4));
  // Row-major; cells are sorted by (from, to) so one cursor walks them.
  auto next = matrix.cells().begin();
  const auto end = matrix.cells().end();
  for (std::size_t i = 0; i < n; ++i) {
    const int y = grid_y + cell * static_cast<int>(i);
    for (std::size_t j = 0; j < n; ++j) {
      const int x = grid_x + cell * static_cast<int>(j);
      const std::string index_attrs = "data-from=\"" + std::to_string(i) +
                                      "\" data-to=\"" + std::to_string(j) +
                                      "\"";
      const std::string pos = "x=\"" + std::to_string(x) + "\" y=\"" +
                              std::to_string(y) + size_attrs;
      if (i == j) {
        out += "<g class=\"diag\" " + index_attrs + "><rect " + pos +
               " fill=\"none\" stroke=\"" + kGridStroke +
               "\" stroke-width=\"0.5\"/><text x=\"" +
               std::to_string(x + cell / 2) + "\" y=\"" +
               std::to_string(y + cell / 2) +
               "\" text-anchor=\"middle\" dominant-baseline=\"central\" "
               "font-size=\"" +
               glyph_px + "\" fill=\"#808080\">X</text></g>\n";
        continue;
      }
      if (next != end && next->from == i && next->to == j) {
        out += "<rect class=\"cell\" " + index_attrs + " data-count=\"" +
               std::to_string(next->aggregate.count) + "\" " + pos +
               " fill=\"" + CellFill(next->aggregate, spec, scale) +
               "\" stroke=\"" + kGridStroke + "\" stroke-width=\"0.5\"/>\n";
        ++next;
      } else {
        out += "<rect class=\"cell empty\" " + index_attrs +
               " data-count=\"0\" " + pos + " fill=\"none\" stroke=\"" +
               kGridStroke + "\" stroke-width=\"0.5\"/>\n";
      }
    }
  }
  out += "</g>\n";

  if (spec.show_labels) {
    out += "<g class=\"row-labels\" text-anchor=\"end\">\n";
    for (std::size_t i = 0; i < n; ++i) {
      out += "<text x=\"" + std::to_string(grid_x - 4) + "\" y=\"" +
             std::to_string(grid_y + cell * static_cast<int>(i) + cell / 2) +
             "\" dominant-baseline=\"central\">" + EscapeXml(labels[i]) +
             "</text>\n";
    }
    out += "</g>\n<g class=\"column-labels\" text-anchor=\"start\">\n";
    for (std::size_t j = 0; j < n; ++j) {
      const int x = grid_x + cell * static_cast<int>(j) + cell / 2;
      const int y = grid_y - 4;
      out += "<text x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
             "\" transform=\"rotate(-90 " + std::to_string(x) + " " +
             std::to_string(y) + ")\" dominant-baseline=\"central\">" +
             EscapeXml(labels[j]) + "</text>\n";
    }
    out += "</g>\n";
  }

  if (spec.show_legend) {
    out += RenderLegend(spec, legend_scale, legend_x, grid_y);
  }
  out += "</svg>\n";
  return {std::move(out), width, height};
}

}  // namespace forummatrix
