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

#include "forummatrix/cli.h"

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "forummatrix/fixture.h"
#include "forummatrix/json_forms.h"
#include "forummatrix/metrics.h"
#include "forummatrix/render.h"
#include "forummatrix/service.h"
#include "forummatrix/snapshot.h"

namespace forummatrix {
namespace {

// Bad option values detected after CLI11 parsing.
struct UsageError {
  std::string message;
};

template <typename T, typename Parse>
T ParseToken(const std::string& token, Parse parse) {
  try {
    return parse(token);
  } catch (const Error& e) {
    throw UsageError{e.what()};
  }
}

struct ThresholdOptions {
  std::optional<double> alpha;
  std::optional<double> tau_share;
  std::optional<int> min_users;
  std::optional<int> scan_min_users;

  void Register(CLI::App* app) {
    app->add_option("--alpha", alpha, "scan-line breadth threshold (0,1]");
    app->add_option("--tau-share", tau_share,
                    "top-2 share at which a forum is leader-dominated [0,1]");
    app->add_option("--min-users", min_users,
                    "forums below this size are indeterminate");
    app->add_option("--scan-min-users", scan_min_users,
                    "forums below this size report no scan lines");
  }

  Thresholds Resolve() const {
    Thresholds t;
    if (alpha) t.alpha = *alpha;
    if (tau_share) t.tau_share = *tau_share;
    if (min_users) t.min_users = *min_users;
    if (scan_min_users) t.scan_min_users = *scan_min_users;
    try {
      t.Validate();
    } catch (const Error& e) {
      throw UsageError{e.what()};
    }
    return t;
  }
};

DatasetSnapshot Load(const std::string& path) {
  return IngestCsvFile(path).snapshot;
}

InteractionMatrix ForumMatrix(const DatasetSnapshot& snapshot,
                              const std::string& forum, UserOrdering order) {
  return BuildMatrix(snapshot.records(ForumId(forum)), order);
}

void WriteFile(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  file << content;
  if (!file) {
    throw Error(ErrorKind::kIoFailure, path, "cannot write '" + path + "'");
  }
}

std::vector<std::string> AnalyzeAll(const DatasetSnapshot& snapshot,
                                    const Thresholds& thresholds,
                                    unsigned jobs) {
  const auto& forums = snapshot.forums();
  std::vector<std::string> lines(forums.size());
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < forums.size(); i += step) {
      const auto matrix = BuildMatrix(snapshot.records(forums[i].id),
                                      UserOrdering::kFirstAppearance);
      lines[i] = PatternReportToJson(AnalyzeMatrix(matrix, thresholds));
    }
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    work(0, 1);
    return lines;
  }
  std::vector<std::future<void>> tasks;
  for (unsigned j = 0; j < jobs; ++j) {
    tasks.push_back(std::async(std::launch::async, work, j, jobs));
  }
  for (auto& task : tasks) task.get();
  return lines;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Interaction-matrix analytics for coded forum records",
               "forummatrix"};
  app.require_subcommand(1);

  std::string input, data, forum, output, order = "first_appearance",
                                         layer = "frequency", palette = "heat",
                                         regime = "mixed", bind = "127.0.0.1";
  bool report = false;
  int forums = 0, users = 0, port = 8080, cell_px = 14, max_users = 500;
  std::int64_t interactions = 0;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  ThresholdOptions metric_options;

  auto* ingest = app.add_subcommand("ingest", "Validate a corpus CSV");
  ingest->add_option("--input", input, "corpus CSV")->required();
  ingest->add_flag("--report", report, "print the full JSON ingest report");

  auto* generate =
      app.add_subcommand("generate-fixture", "Write a synthetic corpus CSV");
  generate->add_option("--forums", forums)->required();
  generate->add_option("--users", users)->required();
  generate->add_option("--interactions", interactions)->required();
  generate->add_option(
      "--regime", regime,
      "leader_dominated | dispersed | reciprocal | mixed (cycles all three)");
  generate->add_option("--seed", seed);
  generate->add_option("--output", output)->required();

  auto* list = app.add_subcommand("list", "Print the forum list as JSON");
  list->add_option("--data", data)->required();

  auto* matrix = app.add_subcommand("matrix", "Print one forum's matrix JSON");
  matrix->add_option("--data", data)->required();
  matrix->add_option("--forum", forum)->required();
  matrix->add_option("--order", order,
                     "first_appearance | activity | lexicographic");

  auto* metrics =
      app.add_subcommand("metrics", "Print one forum's pattern report");
  metrics->add_option("--data", data)->required();
  metrics->add_option("--forum", forum)->required();
  metric_options.Register(metrics);

  auto* metrics_all = app.add_subcommand(
      "metrics-all", "Print one pattern report per forum, one per line");
  metrics_all->add_option("--data", data)->required();
  metrics_all->add_option("--jobs", jobs, "worker threads");
  metric_options.Register(metrics_all);

  auto* render = app.add_subcommand("render", "Write one forum's SVG heat map");
  render->add_option("--data", data)->required();
  render->add_option("--forum", forum)->required();
  render->add_option("--layer", layer, "frequency | trust | sentiment");
  render->add_option("--output", output)->required();
  render->add_option("--order", order);
  render->add_option("--cell-px", cell_px);
  render->add_option("--palette", palette, "heat | gray");
  render->add_option("--max-users", max_users);

  auto* serve = app.add_subcommand("serve", "Serve the HTTP API");
  serve->add_option("--data", data)->required();
  serve->add_option("--port", port);
  serve->add_option("--bind", bind);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return kExitUsage;
  }

  try {
    if (ingest->parsed()) {
      auto result = IngestCsvFile(input);
      for (const auto& r : result.report.rejected) {
        err << input << ":" << r.line << ": " << r.error.token() << ": "
            << r.error.what() << "\n";
      }
      if (report) {
        out << IngestReportToJson(result.report) << "\n";
      } else {
        out << "accepted " << result.report.accepted << ", rejected "
            << result.report.rejected.size() << ", forums "
            << result.report.forums_seen << ", users "
            << result.report.users_seen << "\n";
      }
    } else if (generate->parsed()) {
      FixtureSpec spec;
      spec.forum_count = forums;
      spec.user_count = users;
      spec.interaction_count = interactions;
      spec.seed = seed;
      if (regime == "mixed") {
        spec.regimes = {Regime::kLeaderDominated, Regime::kDispersed,
                        Regime::kReciprocal};
      } else {
        spec.regimes = {ParseToken<Regime>(regime, ParseRegime)};
      }
      WriteFile(output, SerializeCsv(GenerateFixture(spec)));
    } else if (list->parsed()) {
      out << ForumListToJson(ListForums(Load(data))) << "\n";
    } else if (matrix->parsed()) {
      const auto ordering = ParseToken<UserOrdering>(order, ParseOrdering);
      out << MatrixToJson(ForumMatrix(Load(data), forum, ordering)) << "\n";
    } else if (metrics->parsed()) {
      const Thresholds thresholds = metric_options.Resolve();
      const auto m = ForumMatrix(Load(data), forum, UserOrdering::kFirstAppearance);
      out << PatternReportToJson(AnalyzeMatrix(m, thresholds)) << "\n";
    } else if (metrics_all->parsed()) {
      const Thresholds thresholds = metric_options.Resolve();
      for (const auto& line : AnalyzeAll(Load(data), thresholds, jobs)) {
        out << line << "\n";
      }
    } else if (render->parsed()) {
      RenderSpec spec;
      spec.layer = ParseToken<Layer>(layer, ParseLayer);
      spec.palette = ParseToken<FrequencyPalette>(palette, ParsePalette);
      spec.cell_px = cell_px;
      spec.max_render_users = max_users;
      try {
        spec.Validate();
      } catch (const Error& e) {
        throw UsageError{e.what()};
      }
      const auto ordering = ParseToken<UserOrdering>(order, ParseOrdering);
      const auto m = ForumMatrix(Load(data), forum, ordering);
      WriteFile(output, RenderMatrixSvg(m, spec).content);
    } else if (serve->parsed()) {
      ServiceConfig config;
      config.data_path = data;
      config.port = port;
      config.bind_address = bind;
      const ForumService service = LoadService(config);
      HttpServer server(service);
      const int bound = server.Bind(bind, port);
      err << "serving " << service.snapshot().forums().size()
          << " forums on http://" << bind << ":" << bound << "\n";
      server.Listen();
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.message << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.token() << ": " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}

}  // namespace forummatrix
