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

// Canonical JSON text shared by the CLI and the HTTP service. Output is
// compact with a fixed key order; reals carry exactly six decimals, rounded
// half to even.

#ifndef FORUMMATRIX_JSON_FORMS_H_
#define FORUMMATRIX_JSON_FORMS_H_

#include <string>
#include <utility>
#include <vector>

#include "forummatrix/matrix.h"
#include "forummatrix/metrics.h"
#include "forummatrix/snapshot.h"

namespace forummatrix {

std::string FormatReal(double value);

std::string MatrixToJson(const InteractionMatrix& matrix);
std::string PatternReportToJson(const PatternReport& report);
std::string ForumListToJson(const std::vector<ForumMeta>& forums);
std::string IngestReportToJson(const IngestReport& report);

// {"error":token,"message":...} plus any extra integer fields, in order.
std::string ErrorToJson(
    std::string_view token, std::string_view message,
    const std::vector<std::pair<std::string, std::int64_t>>& extra = {});

}  // namespace forummatrix

#endif  // FORUMMATRIX_JSON_FORMS_H_
