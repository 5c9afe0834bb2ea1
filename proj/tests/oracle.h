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

// Brute-force reference scores over a dense count matrix. Written straight
// from the metric definitions by enumerating pairs; shares nothing with the
// library beyond the input format.

#ifndef FORUMMATRIX_TESTS_ORACLE_H_
#define FORUMMATRIX_TESTS_ORACLE_H_

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <vector>

namespace forummatrix::oracle {

using Dense = std::vector<std::vector<std::int64_t>>;

struct Scores {
  double cosine;
  double reciprocity;
  double density;
  double gini;
  double top2_share;
  // Active-user indices of the top-two pair that achieved top2_share.
  std::size_t top_a = 0, top_b = 1;
};

// Drops users with no interaction in either direction; a built matrix only
// lists users that appear in some record.
inline Dense ActiveOnly(const Dense& d) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < d.size(); ++i) {
    bool active = false;
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (i != j && (d[i][j] > 0 || d[j][i] > 0)) active = true;
    }
    if (active) keep.push_back(i);
  }
  Dense out(keep.size(), std::vector<std::int64_t>(keep.size(), 0));
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b)
      if (a != b) out[a][b] = d[keep[a]][keep[b]];
  return out;
}

inline Scores Score(const Dense& input) {
  const Dense c = ActiveOnly(input);
  const std::size_t n = c.size();

  // Off-diagonal vector of M and of its transpose, then their dot product
  // and the squared norm of M.
  std::vector<std::int64_t> v, vt;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) {
        v.push_back(c[i][j]);
        vt.push_back(c[j][i]);
      }
  std::int64_t dot = 0, norm2 = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    dot += v[k] * vt[k];
    norm2 += v[k] * v[k];
  }

  std::int64_t active = 0, mutual = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (c[i][j] + c[j][i] > 0) ++active;
      if (c[i][j] > 0 && c[j][i] > 0) ++mutual;
    }

  std::vector<std::int64_t> nonzero;
  for (std::int64_t x : v)
    if (x > 0) nonzero.push_back(x);
  double gini = 0.0;
  if (!nonzero.empty()) {
    std::int64_t abs_sum = 0, total = 0;
    for (std::int64_t a : nonzero) {
      total += a;
      for (std::int64_t b : nonzero) abs_sum += std::llabs(a - b);
    }
    const double m = static_cast<double>(nonzero.size());
    const double mean = static_cast<double>(total) / m;
    gini = static_cast<double>(abs_sum) / (2.0 * m * m * mean);
  }

  // Participation, then every pair {u, v} that is a legitimate top-two set:
  // nobody else participates more than the lesser of the two.
  std::vector<std::int64_t> part(n, 0);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) {
        part[i] += c[i][j];
        part[j] += c[i][j];
        total += c[i][j];
      }
  std::int64_t best = 0;
  std::size_t top_a = 0, top_b = 1;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t w = u + 1; w < n; ++w) {
      const std::int64_t floor = std::min(part[u], part[w]);
      bool valid = true;
      for (std::size_t x = 0; x < n; ++x)
        if (x != u && x != w && part[x] > floor) valid = false;
      if (!valid) continue;
      std::int64_t touching = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j && (i == u || i == w || j == u || j == w))
            touching += c[i][j];
      if (touching > best) {
        best = touching;
        top_a = u;
        top_b = w;
      }
    }

  Scores s;
  s.cosine = static_cast<double>(dot) / static_cast<double>(norm2);
  s.reciprocity = static_cast<double>(mutual) / static_cast<double>(active);
  s.density = static_cast<double>(std::count_if(
                  v.begin(), v.end(), [](std::int64_t x) { return x > 0; })) /
              static_cast<double>(n * (n - 1));
  s.gini = gini;
  s.top2_share = static_cast<double>(best) / static_cast<double>(total);
  s.top_a = top_a;
  s.top_b = top_b;
  return s;
}

}  // namespace forummatrix::oracle

#endif  // FORUMMATRIX_TESTS_ORACLE_H_
