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

#include "forummatrix/error.h"

#include <utility>

namespace forummatrix {

std::string_view ErrorToken(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUnknownLabel: return "unknown_label";
    case ErrorKind::kSelfInteraction: return "self_interaction";
    case ErrorKind::kEmptyField: return "empty_field";
    case ErrorKind::kInvalidIdentifier: return "invalid_identifier";
    case ErrorKind::kNegativeTimestamp: return "negative_timestamp";
    case ErrorKind::kInvalidTimestamp: return "invalid_timestamp";
    case ErrorKind::kFieldCount: return "field_count";
    case ErrorKind::kForumNameConflict: return "forum_name_conflict";
    case ErrorKind::kMissingHeader: return "missing_header";
    case ErrorKind::kIoFailure: return "io_failure";
    case ErrorKind::kUnknownForum: return "unknown_forum";
    case ErrorKind::kInfeasibleSpec: return "infeasible_spec";
    case ErrorKind::kEmptyForum: return "empty_forum";
    case ErrorKind::kMixedForums: return "mixed_forums";
    case ErrorKind::kEmptyCounts: return "empty_counts";
    case ErrorKind::kEmptyMatrix: return "empty_matrix";
    case ErrorKind::kInvalidArgument: return "invalid_argument";
    case ErrorKind::kTooManyUsers: return "too_many_users";
    case ErrorKind::kLayerScaleMismatch: return "layer_scale_mismatch";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, std::string detail, const std::string& message)
    : std::runtime_error(message), kind_(kind), detail_(std::move(detail)) {}

}  // namespace forummatrix
