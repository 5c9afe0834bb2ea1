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

#ifndef FORUMMATRIX_RENDER_H_
#define FORUMMATRIX_RENDER_H_

#include <string>
#include <string_view>
#include <variant>

#include "forummatrix/matrix.h"

namespace forummatrix {

enum class Layer { kFrequency, kTrust, kSentiment };

// Tokens: frequency, trust, sentiment.
std::string_view ToToken(Layer layer);
// Throws Error(kInvalidArgument).
Layer ParseLayer(std::string_view token);

// Sequential ramps for the frequency layer.
enum class FrequencyPalette { kHeat, kGray };
std::string_view ToToken(FrequencyPalette palette);
FrequencyPalette ParsePalette(std::string_view token);

struct RenderSpec {
  Layer layer = Layer::kFrequency;
  int cell_px = 14;
  FrequencyPalette palette = FrequencyPalette::kHeat;
  int bucket_count = kDefaultBucketCount;
  bool show_labels = true;
  bool show_legend = true;
  int max_render_users = 500;

  // Throws Error(kInvalidArgument) for cell_px < 4, max_render_users < 2 or
  // bucket_count < 2.
  void Validate() const;
};

struct SvgDocument {
  std::string content;
  int width = 0;
  int height = 0;
};

// SVG 1.1 heat map. Every grid position carries data-from/data-to index
// attributes: off-diagonal cells are <rect class="cell">, diagonal cells are
// <g class="diag"> holding an 'X' and no fill. Output is a pure function of
// its inputs. Throws Error(kEmptyMatrix) or Error(kTooManyUsers).
SvgDocument RenderMatrixSvg(const InteractionMatrix& matrix,
                            const RenderSpec& spec);

// The categorical label set of the trust or sentiment layer.
struct CategoricalScale {
  Layer layer;
};

using LegendScale = std::variant<ColorScale, CategoricalScale>;

// One swatch and label per used bucket (low to high) or per category in
// taxonomy order, as a <g class="legend"> fragment whose origin is (x, y).
// Throws Error(kLayerScaleMismatch) when the scale does not fit spec.layer.
std::string RenderLegend(const RenderSpec& spec, const LegendScale& scale,
                         int x = 0, int y = 0);

// "#rrggbb". Bucket 0 is the empty background.
std::string FrequencyColor(FrequencyPalette palette, int bucket,
                           int bucket_count);
std::string_view LabelColor(TrustLabel label);
std::string_view LabelColor(SentimentLabel label);

}  // namespace forummatrix

#endif  // FORUMMATRIX_RENDER_H_
