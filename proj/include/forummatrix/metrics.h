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

// Quantitative readings of a forum matrix: how mirrored it is about the
// diagonal, which rows and columns stand out as lines, and how concentrated
// the interaction mass is.

#ifndef FORUMMATRIX_METRICS_H_
#define FORUMMATRIX_METRICS_H_

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "forummatrix/matrix.h"

namespace forummatrix {

struct SymmetryScores {
  // sum c(i,j)c(j,i) / sum c(i,j)^2 over off-diagonal cells.
  double cosine_symmetry = 0.0;
  // Reciprocated dyads over active dyads.
  double dyad_reciprocity = 0.0;
};

struct ScanLine {
  UserId user;
  double fraction;  // distinct partners / (N - 1)

  friend bool operator==(const ScanLine&, const ScanLine&) = default;
};

struct ScanLineReport {
  std::vector<ScanLine> row_lines;     // broad senders
  std::vector<ScanLine> column_lines;  // broad recipients
  double alpha = 0.0;
};

struct DispersionScores {
  double density = 0.0;
  double cell_gini = 0.0;
  double top2_share = 0.0;
  // False for N <= 3, where two users already cover most of the forum.
  bool top2_informative = true;
};

enum class Classification { kCollective, kLeaderDominated, kIndeterminate };

std::string_view ToToken(Classification classification);

struct Thresholds {
  double alpha = 0.5;          // scan-line breadth, in (0, 1]
  int scan_min_users = 4;      // no lines reported below this N
  double tau_share = 0.75;     // top-2 share for leader-dominated, in [0, 1]
  int min_users = 5;           // indeterminate below this N

  // Throws Error(kInvalidArgument) naming the offending parameter.
  void Validate() const;
};

struct PatternReport {
  ForumId forum;
  std::int64_t n_users = 0;
  SymmetryScores symmetry;
  ScanLineReport scan_lines;
  DispersionScores dispersion;
  Classification classification = Classification::kIndeterminate;
  Thresholds thresholds;
};

// All of these throw Error(kEmptyMatrix) when total_count == 0.
SymmetryScores ComputeSymmetry(const InteractionMatrix& matrix);
ScanLineReport DetectScanLines(const InteractionMatrix& matrix, double alpha,
                               int min_users);
DispersionScores ComputeDispersion(const InteractionMatrix& matrix);

// Gini coefficient of positive integer values via the mean absolute
// difference. Zero for fewer than two values.
double GiniCoefficient(std::vector<std::int64_t> values);

// Number of records touching the two most active users. Among the choices
// allowed by participation ties, the pair covering the most records counts,
// so the result does not depend on how users are named.
std::int64_t TopTwoTouching(const InteractionMatrix& matrix);

Classification Classify(std::int64_t n_users, const SymmetryScores& symmetry,
                        const ScanLineReport& scan_lines,
                        const DispersionScores& dispersion,
                        const Thresholds& thresholds);

PatternReport AnalyzeMatrix(const InteractionMatrix& matrix,
                            const Thresholds& thresholds = {});

}  // namespace forummatrix

#endif  // FORUMMATRIX_METRICS_H_
