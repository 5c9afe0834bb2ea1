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

#include "forummatrix/service.h"

#include <charconv>
#include <optional>
#include <utility>
#include <vector>

#include "forummatrix/json_forms.h"
#include "httplib.h"

namespace forummatrix {
namespace {

HttpResponse Json(int status, std::string body) {
  body.push_back('\n');
  return {status, "application/json", std::move(body)};
}

HttpResponse ErrorResponse(
    int status, std::string_view token, std::string_view message,
    const std::vector<std::pair<std::string, std::int64_t>>& extra = {}) {
  return Json(status, ErrorToJson(token, message, extra));
}

std::optional<std::string> Param(const std::map<std::string, std::string>& q,
                                 const std::string& key) {
  auto it = q.find(key);
  if (it == q.end()) return std::nullopt;
  return it->second;
}

template <typename T>
std::optional<T> ParseNumber(const std::string& text) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    return std::nullopt;
  }
  return value;
}

// The service accepts both `order` and `ordering`.
std::optional<std::string> OrderingParam(
    const std::map<std::string, std::string>& query) {
  if (auto v = Param(query, "order")) return v;
  return Param(query, "ordering");
}

// Shared by matrix and render: resolves the forum and ordering or returns
// the error response.
struct MatrixRequest {
  std::optional<InteractionMatrix> matrix;
  std::optional<HttpResponse> error;
};

MatrixRequest ResolveMatrix(const DatasetSnapshot& snapshot,
                            const std::string& forum,
                            const std::map<std::string, std::string>& query) {
  UserOrdering ordering = UserOrdering::kFirstAppearance;
  if (auto token = OrderingParam(query)) {
    try {
      ordering = ParseOrdering(*token);
    } catch (const Error& e) {
      return {std::nullopt, ErrorResponse(400, "invalid_ordering", e.what())};
    }
  }
  ForumId id;
  try {
    id = ForumId(forum);
  } catch (const Error& e) {
    return {std::nullopt, ErrorResponse(404, "unknown_forum", e.what())};
  }
  if (!snapshot.contains(id)) {
    return {std::nullopt,
            ErrorResponse(404, "unknown_forum",
                          "unknown forum '" + forum + "'")};
  }
  return {BuildMatrix(snapshot.records(id), ordering), std::nullopt};
}

}  // namespace

ForumService::ForumService(std::shared_ptr<const DatasetSnapshot> snapshot,
                           Thresholds thresholds, RenderSpec render)
    : snapshot_(std::move(snapshot)),
      thresholds_(thresholds),
      render_(render) {
  thresholds_.Validate();
  render_.Validate();
}

HttpResponse ForumService::Handle(const HttpRequest& request) const {
  if (request.method != "GET" && request.method != "HEAD") {
    return ErrorResponse(405, "method_not_allowed",
                         "the service is read-only");
  }
  const std::string& path = request.path;
  if (path == "/forums") return GetForums();
  if (path == "/healthz") return GetHealth();
  constexpr std::string_view kPrefix = "/forums/";
  if (path.starts_with(kPrefix)) {
    const std::string rest = path.substr(kPrefix.size());
    const auto slash = rest.rfind('/');
    if (slash != std::string::npos && slash > 0) {
      const std::string forum = rest.substr(0, slash);
      const std::string action = rest.substr(slash + 1);
      if (action == "matrix") return GetMatrix(forum, request.query);
      if (action == "metrics") return GetMetrics(forum, request.query);
      if (action == "render.svg") return GetRender(forum, request.query);
    }
  }
  return ErrorResponse(404, "not_found", "no route for '" + path + "'");
}

HttpResponse ForumService::GetForums() const {
  return Json(200, ForumListToJson(ListForums(*snapshot_)));
}

HttpResponse ForumService::GetHealth() const {
  return Json(200, "{\"status\":\"ok\",\"forums\":" +
                       std::to_string(snapshot_->forums().size()) + "}");
}

HttpResponse ForumService::GetMatrix(
    const std::string& forum,
    const std::map<std::string, std::string>& query) const {
  if (auto layer = Param(query, "layer")) {
    try {
      ParseLayer(*layer);
    } catch (const Error& e) {
      return ErrorResponse(400, "invalid_layer", e.what());
    }
  }
  auto resolved = ResolveMatrix(*snapshot_, forum, query);
  if (resolved.error) return *resolved.error;
  return Json(200, MatrixToJson(*resolved.matrix));
}

HttpResponse ForumService::GetMetrics(
    const std::string& forum,
    const std::map<std::string, std::string>& query) const {
  Thresholds thresholds = thresholds_;
  auto bad = [](const std::string& key, const std::string& value) {
    return ErrorResponse(400, "invalid_threshold",
                         key + " = '" + value + "' is not valid");
  };
  for (const char* key : {"alpha", "tau_share"}) {
    if (auto text = Param(query, key)) {
      auto value = ParseNumber<double>(*text);
      if (!value) return bad(key, *text);
      (std::string_view(key) == "alpha" ? thresholds.alpha
                                        : thresholds.tau_share) = *value;
    }
  }
  for (const char* key : {"min_users", "scan_min_users"}) {
    if (auto text = Param(query, key)) {
      auto value = ParseNumber<int>(*text);
      if (!value) return bad(key, *text);
      (std::string_view(key) == "min_users" ? thresholds.min_users
                                            : thresholds.scan_min_users) =
          *value;
    }
  }
  try {
    thresholds.Validate();
  } catch (const Error& e) {
    return ErrorResponse(400, "invalid_threshold", e.what());
  }
  auto resolved = ResolveMatrix(*snapshot_, forum, query);
  if (resolved.error) return *resolved.error;
  return Json(200,
              PatternReportToJson(AnalyzeMatrix(*resolved.matrix, thresholds)));
}

HttpResponse ForumService::GetRender(
    const std::string& forum,
    const std::map<std::string, std::string>& query) const {
  RenderSpec spec = render_;
  if (auto layer = Param(query, "layer")) {
    try {
      spec.layer = ParseLayer(*layer);
    } catch (const Error& e) {
      return ErrorResponse(400, "invalid_layer", e.what());
    }
  }
  if (auto palette = Param(query, "palette")) {
    try {
      spec.palette = ParsePalette(*palette);
    } catch (const Error& e) {
      return ErrorResponse(400, "invalid_palette", e.what());
    }
  }
  if (auto text = Param(query, "cell_px")) {
    auto value = ParseNumber<int>(*text);
    if (!value || *value < 4) {
      return ErrorResponse(400, "invalid_cell_px",
                           "cell_px must be an integer >= 4");
    }
    spec.cell_px = *value;
  }
  auto resolved = ResolveMatrix(*snapshot_, forum, query);
  if (resolved.error) return *resolved.error;
  const auto n = static_cast<std::int64_t>(resolved.matrix->size());
  if (n > spec.max_render_users) {
    return ErrorResponse(413, "too_many_users",
                         "matrix too large to render; use the matrix JSON",
                         {{"n", n}, {"cap", spec.max_render_users}});
  }
  SvgDocument svg = RenderMatrixSvg(*resolved.matrix, spec);
  return {200, std::string(kSvgMediaType), std::move(svg.content)};
}

ForumService LoadService(const ServiceConfig& config) {
  auto result = IngestCsvFile(config.data_path);
  return ForumService(
      std::make_shared<const DatasetSnapshot>(std::move(result.snapshot)),
      config.thresholds, config.render);
}

HttpServer::HttpServer(const ForumService& service)
    : server_(std::make_unique<httplib::Server>()) {
  auto dispatch = [&service](const httplib::Request& req,
                             httplib::Response& res) {
    HttpRequest request;
    request.method = req.method;
    request.path = req.path;
    for (const auto& [key, value] : req.params) {
      request.query.emplace(key, value);  // first value wins
    }
    HttpResponse response;
    try {
      response = service.Handle(request);
    } catch (const std::exception& e) {
      response = ErrorResponse(500, "internal_error", e.what());
    }
    res.status = response.status;
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_content(std::move(response.body), response.content_type);
  };
  server_->Get(".*", dispatch);
  server_->Post(".*", dispatch);
  server_->Put(".*", dispatch);
  server_->Delete(".*", dispatch);
  server_->Options(".*", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Methods", "GET, OPTIONS");
  });
}

HttpServer::~HttpServer() { Stop(); }

int HttpServer::Bind(const std::string& address, int port) {
  bool ok = false;
  int bound = port;
  if (port == 0) {
    bound = server_->bind_to_any_port(address);
    ok = bound > 0;
  } else {
    ok = server_->bind_to_port(address, port);
  }
  if (!ok) {
    throw Error(ErrorKind::kIoFailure, address + ":" + std::to_string(port),
                "cannot bind " + address + ":" + std::to_string(port));
  }
  return bound;
}

void HttpServer::Listen() { server_->listen_after_bind(); }

void HttpServer::Stop() {
  if (server_->is_running()) server_->stop();
}

}  // namespace forummatrix
