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

// Read-only JSON-over-HTTP front end over an immutable snapshot.
//
//   GET /forums                    forum list
//   GET /forums/{id}/matrix        ?order=&layer=
//   GET /forums/{id}/metrics       ?alpha=&tau_share=&min_users=&scan_min_users=
//   GET /forums/{id}/render.svg    ?layer=&cell_px=&order=&palette=
//   GET /healthz
//
// Errors are {"error":token,...} with tokens unknown_forum, invalid_ordering,
// invalid_layer, invalid_threshold, invalid_cell_px, invalid_palette,
// too_many_users, not_found, method_not_allowed.

#ifndef FORUMMATRIX_SERVICE_H_
#define FORUMMATRIX_SERVICE_H_

#include <map>
#include <memory>
#include <string>

#include "forummatrix/metrics.h"
#include "forummatrix/render.h"
#include "forummatrix/snapshot.h"

namespace httplib {
class Server;
}

namespace forummatrix {

struct ServiceConfig {
  std::string data_path;
  int port = 8080;
  std::string bind_address = "127.0.0.1";
  Thresholds thresholds;
  RenderSpec render;
};

struct HttpRequest {
  std::string method = "GET";
  std::string path;  // already percent-decoded
  std::map<std::string, std::string> query;
};

struct HttpResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

inline constexpr std::string_view kSvgMediaType = "image/svg+xml";

// Stateless apart from the shared snapshot; Handle may be called from any
// number of threads.
class ForumService {
 public:
  ForumService(std::shared_ptr<const DatasetSnapshot> snapshot,
               Thresholds thresholds = {}, RenderSpec render = {});

  HttpResponse Handle(const HttpRequest& request) const;

  HttpResponse GetForums() const;
  HttpResponse GetHealth() const;
  HttpResponse GetMatrix(const std::string& forum,
                         const std::map<std::string, std::string>& query) const;
  HttpResponse GetMetrics(const std::string& forum,
                          const std::map<std::string, std::string>& query) const;
  HttpResponse GetRender(const std::string& forum,
                         const std::map<std::string, std::string>& query) const;

  const DatasetSnapshot& snapshot() const { return *snapshot_; }

 private:
  std::shared_ptr<const DatasetSnapshot> snapshot_;
  Thresholds thresholds_;
  RenderSpec render_;
};

// Ingests config.data_path. Throws Error when the file is missing or its
// header is wrong; rejected lines are tolerated.
ForumService LoadService(const ServiceConfig& config);

// Owns the listening socket. Responses carry a permissive CORS header.
class HttpServer {
 public:
  explicit HttpServer(const ForumService& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Port 0 picks a free port. Returns the bound port; throws
  // Error(kIoFailure) when binding fails.
  int Bind(const std::string& address, int port);
  // Blocks until Stop().
  void Listen();
  void Stop();

 private:
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace forummatrix

#endif  // FORUMMATRIX_SERVICE_H_
