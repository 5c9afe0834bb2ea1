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

#include "forummatrix/metrics.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace forummatrix {
namespace {

void RequireNonEmpty(const InteractionMatrix& matrix) {
  if (matrix.total_count() == 0) {
    throw Error(ErrorKind::kEmptyMatrix, matrix.forum().value(),
                "matrix has no interactions");
  }
}

std::vector<ScanLine> SortedLines(const InteractionMatrix& matrix,
                                  const std::vector<std::int64_t>& breadth,
                                  double alpha) {
  const double denominator = static_cast<double>(matrix.size() - 1);
  std::vector<ScanLine> lines;
  for (std::size_t u = 0; u < matrix.size(); ++u) {
    const double fraction = static_cast<double>(breadth[u]) / denominator;
    if (breadth[u] > 0 && fraction >= alpha) {
      lines.push_back({matrix.users()[u], fraction});
    }
  }
  std::sort(lines.begin(), lines.end(),
            [](const ScanLine& a, const ScanLine& b) {
              if (a.fraction != b.fraction) return a.fraction > b.fraction;
              return a.user < b.user;
            });
  return lines;
}

}  // namespace

std::string_view ToToken(Classification classification) {
  switch (classification) {
    case Classification::kCollective: return "collective";
    case Classification::kLeaderDominated: return "leader_dominated";
    case Classification::kIndeterminate: return "indeterminate";
  }
  return "indeterminate";
}

void Thresholds::Validate() const {
  auto fail = [](const char* name, const std::string& value,
                 const char* range) {
    throw Error(ErrorKind::kInvalidArgument, name,
                std::string(name) + " = " + value + " is outside " + range);
  };
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    fail("alpha", std::to_string(alpha), "(0, 1]");
  }
  if (!(tau_share >= 0.0 && tau_share <= 1.0)) {
    fail("tau_share", std::to_string(tau_share), "[0, 1]");
  }
  if (scan_min_users < 0) {
    fail("scan_min_users", std::to_string(scan_min_users), "[0, inf)");
  }
  if (min_users < 0) fail("min_users", std::to_string(min_users), "[0, inf)");
}

SymmetryScores ComputeSymmetry(const InteractionMatrix& matrix) {
  RequireNonEmpty(matrix);
  std::int64_t dot = 0;
  std::int64_t norm2 = 0;
  std::int64_t reciprocated = 0;
  for (const Cell& cell : matrix.cells()) {
    const std::int64_t c = cell.aggregate.count;
    const std::int64_t mirror = matrix.count(cell.to, cell.from);
    dot += c * mirror;
    norm2 += c * c;
    if (mirror > 0 && cell.from < cell.to) ++reciprocated;
  }
  const auto cells = static_cast<std::int64_t>(matrix.cells().size());
  const std::int64_t active = cells - reciprocated;
  return {static_cast<double>(dot) / static_cast<double>(norm2),
          static_cast<double>(reciprocated) / static_cast<double>(active)};
}

ScanLineReport DetectScanLines(const InteractionMatrix& matrix, double alpha,
                               int min_users) {
  RequireNonEmpty(matrix);
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "alpha",
                "alpha must lie in (0, 1]");
  }
  ScanLineReport report;
  report.alpha = alpha;
  if (matrix.size() < static_cast<std::size_t>(std::max(min_users, 0))) {
    return report;
  }
  std::vector<std::int64_t> out_breadth(matrix.size(), 0);
  std::vector<std::int64_t> in_breadth(matrix.size(), 0);
  for (const Cell& cell : matrix.cells()) {
    ++out_breadth[cell.from];
    ++in_breadth[cell.to];
  }
  report.row_lines = SortedLines(matrix, out_breadth, alpha);
  report.column_lines = SortedLines(matrix, in_breadth, alpha);
  return report;
}

double GiniCoefficient(std::vector<std::int64_t> values) {
  const auto n = static_cast<std::int64_t>(values.size());
  if (n < 2) return 0.0;
  std::sort(values.begin(), values.end());
  // Sum over ordered pairs of |x_a - x_b| equals 2 * sum (2i - n + 1) x_i
  // for ascending x.
  std::int64_t weighted = 0;
  std::int64_t sum = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    weighted += (2 * i - n + 1) * values[static_cast<std::size_t>(i)];
    sum += values[static_cast<std::size_t>(i)];
  }
  return static_cast<double>(2 * weighted) /
         (2.0 * static_cast<double>(n) * static_cast<double>(sum));
}

std::int64_t TopTwoTouching(const InteractionMatrix& matrix) {
  const std::size_t n = matrix.size();
  std::vector<std::int64_t> participation(n, 0);
  for (const Cell& cell : matrix.cells()) {
    participation[cell.from] += cell.aggregate.count;
    participation[cell.to] += cell.aggregate.count;
  }
  auto touching = [&](std::size_t u, std::size_t v) {
    return participation[u] + participation[v] - matrix.count(u, v) -
           matrix.count(v, u);
  };

  std::vector<std::int64_t> sorted = participation;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const std::int64_t first = sorted[0];
  const std::int64_t second = sorted.size() > 1 ? sorted[1] : 0;

  std::vector<std::size_t> leaders, runners_up;
  for (std::size_t u = 0; u < n; ++u) {
    if (participation[u] == first) leaders.push_back(u);
    else if (participation[u] == second) runners_up.push_back(u);
  }
  std::int64_t best = 0;
  if (leaders.size() >= 2) {
    const std::int64_t ceiling = 2 * first;
    for (std::size_t a = 0; a < leaders.size() && best < ceiling; ++a) {
      for (std::size_t b = a + 1; b < leaders.size() && best < ceiling; ++b) {
        best = std::max(best, touching(leaders[a], leaders[b]));
      }
    }
  } else {
    for (std::size_t v : runners_up) {
      best = std::max(best, touching(leaders[0], v));
    }
  }
  return best;
}

DispersionScores ComputeDispersion(const InteractionMatrix& matrix) {
  RequireNonEmpty(matrix);
  const auto n = static_cast<double>(matrix.size());
  DispersionScores scores;
  scores.density = static_cast<double>(matrix.cells().size()) / (n * (n - 1));

  std::vector<std::int64_t> counts;
  counts.reserve(matrix.cells().size());
  for (const Cell& cell : matrix.cells()) counts.push_back(cell.aggregate.count);
  scores.cell_gini = GiniCoefficient(std::move(counts));

  scores.top2_share = static_cast<double>(TopTwoTouching(matrix)) /
                      static_cast<double>(matrix.total_count());
  scores.top2_informative = matrix.size() > 3;
  return scores;
}

Classification Classify(std::int64_t n_users, const SymmetryScores&,
                        const ScanLineReport&,
                        const DispersionScores& dispersion,
                        const Thresholds& thresholds) {
  if (n_users < thresholds.min_users) return Classification::kIndeterminate;
  if (dispersion.top2_share >= thresholds.tau_share) {
    return Classification::kLeaderDominated;
  }
  return Classification::kCollective;
}

PatternReport AnalyzeMatrix(const InteractionMatrix& matrix,
                            const Thresholds& thresholds) {
  thresholds.Validate();
  PatternReport report;
  report.forum = matrix.forum();
  report.n_users = static_cast<std::int64_t>(matrix.size());
  report.symmetry = ComputeSymmetry(matrix);
  report.scan_lines =
      DetectScanLines(matrix, thresholds.alpha, thresholds.scan_min_users);
  report.dispersion = ComputeDispersion(matrix);
  report.thresholds = thresholds;
  report.classification =
      Classify(report.n_users, report.symmetry, report.scan_lines,
               report.dispersion, thresholds);
  return report;
}

}  // namespace forummatrix
