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

#ifndef FORUMMATRIX_ERROR_H_
#define FORUMMATRIX_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace forummatrix {

// Every failure raised by the library. The token is stable and is what the
// service and the ingest report expose; the message is for humans.
enum class ErrorKind {
  kUnknownLabel,
  kSelfInteraction,
  kEmptyField,
  kInvalidIdentifier,
  kNegativeTimestamp,
  kInvalidTimestamp,
  kFieldCount,
  kForumNameConflict,
  kMissingHeader,
  kIoFailure,
  kUnknownForum,
  kInfeasibleSpec,
  kEmptyForum,
  kMixedForums,
  kEmptyCounts,
  kEmptyMatrix,
  kInvalidArgument,
  kTooManyUsers,
  kLayerScaleMismatch,
};

std::string_view ErrorToken(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  // `detail` is the offending value (label token, user id, field name...).
  Error(ErrorKind kind, std::string detail, const std::string& message);

  ErrorKind kind() const { return kind_; }
  std::string_view token() const { return ErrorToken(kind_); }
  const std::string& detail() const { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace forummatrix

#endif  // FORUMMATRIX_ERROR_H_
