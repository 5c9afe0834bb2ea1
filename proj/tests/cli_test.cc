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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "forummatrix/service.h"
#include "gtest/gtest.h"
#include "json.hpp"

namespace forummatrix {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run Cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("forummatrix_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const auto path = (dir_ / name).string();
    std::ofstream(path, std::ios::binary) << text;
    return path;
  }

  std::string Path(const std::string& name) { return (dir_ / name).string(); }

  fs::path dir_;
};

const std::string kSmall = std::string(kCsvHeader) +
                           "\n"
                           "phd,PHD,p1,1,A,B,trust,positive\n"
                           "phd,PHD,p2,2,B,A,trust,negative\n"
                           "phd,PHD,p3,3,A,C,mistrust,negative\n"
                           "phd,PHD,p4,4,C,C,trust,positive\n";

TEST_F(CliTest, UsageErrorsExitOne) {
  EXPECT_EQ(Cli({}).code, kExitUsage);
  EXPECT_EQ(Cli({"bogus"}).code, kExitUsage);
  EXPECT_EQ(Cli({"list"}).code, kExitUsage);
  const auto data = Write("c.csv", kSmall);
  EXPECT_EQ(Cli({"matrix", "--data", data, "--forum", "phd", "--order", "x"})
                .code,
            kExitUsage);
  EXPECT_EQ(Cli({"metrics", "--data", data, "--forum", "phd", "--alpha", "2"})
                .code,
            kExitUsage);
  EXPECT_EQ(Cli({"render", "--data", data, "--forum", "phd", "--output",
                 Path("o.svg"), "--layer", "rainbow"})
                .code,
            kExitUsage);
}

TEST_F(CliTest, DataErrorsExitTwo) {
  const auto data = Write("c.csv", kSmall);
  const auto run = Cli({"matrix", "--data", data, "--forum", "nosuch"});
  EXPECT_EQ(run.code, kExitData);
  EXPECT_NE(run.err.find("unknown_forum"), std::string::npos);
  EXPECT_EQ(Cli({"list", "--data", Path("missing.csv")}).code, kExitData);
  EXPECT_EQ(Cli({"generate-fixture", "--forums", "3", "--users", "2",
                 "--interactions", "5", "--output", Path("f.csv")})
                .code,
            kExitData);
}

TEST_F(CliTest, EmptyCorpusListsNothing) {
  const auto data = Write("empty.csv", std::string(kCsvHeader) + "\n");
  const auto run = Cli({"list", "--data", data});
  EXPECT_EQ(run.code, kExitOk);
  EXPECT_EQ(run.out, "[]\n");
}

TEST_F(CliTest, IngestSummaryAndReport) {
  const auto data = Write("c.csv", kSmall);
  auto run = Cli({"ingest", "--input", data});
  EXPECT_EQ(run.code, kExitOk);
  EXPECT_EQ(run.out, "accepted 3, rejected 1, forums 1, users 3\n");
  EXPECT_NE(run.err.find(":5: self_interaction"), std::string::npos);
  run = Cli({"ingest", "--input", data, "--report"});
  const auto report = nlohmann::json::parse(run.out);
  EXPECT_EQ(report["accepted"], 3);
  EXPECT_EQ(report["rejected"][0]["line"], 5);
  EXPECT_EQ(report["rejected"][0]["error"], "self_interaction");
  EXPECT_EQ(report["rejected"][0]["detail"], "C");
}

TEST_F(CliTest, OutputMatchesServiceBytes) {
  const auto data = Write("c.csv", kSmall);
  const ForumService service(std::make_shared<const DatasetSnapshot>(
      IngestCsvFile(data).snapshot));
  auto request = [](std::string path,
                    std::map<std::string, std::string> query = {}) {
    HttpRequest r;
    r.path = std::move(path);
    r.query = std::move(query);
    return r;
  };
  EXPECT_EQ(Cli({"list", "--data", data}).out,
            service.Handle(request("/forums")).body);
  EXPECT_EQ(
      Cli({"matrix", "--data", data, "--forum", "phd", "--order", "activity"})
          .out,
      service.Handle(request("/forums/phd/matrix", {{"order", "activity"}}))
          .body);
  EXPECT_EQ(Cli({"metrics", "--data", data, "--forum", "phd", "--min-users",
                 "2"})
                .out,
            service.Handle(request("/forums/phd/metrics", {{"min_users", "2"}}))
                .body);
  ASSERT_EQ(Cli({"render", "--data", data, "--forum", "phd", "--layer",
                 "sentiment", "--output", Path("o.svg")})
                .code,
            kExitOk);
  std::ifstream in(Path("o.svg"), std::ios::binary);
  std::ostringstream svg;
  svg << in.rdbuf();
  EXPECT_EQ(svg.str(), service.Handle(request("/forums/phd/render.svg",
                                              {{"layer", "sentiment"}}))
                           .body);
}

TEST_F(CliTest, GenerateThenAnalyzeAll) {
  const auto path = Path("fixture.csv");
  ASSERT_EQ(Cli({"generate-fixture", "--forums", "6", "--users", "60",
                 "--interactions", "300", "--seed", "4", "--output", path})
                .code,
            kExitOk);
  const auto serial = Cli({"metrics-all", "--data", path});
  const auto parallel = Cli({"metrics-all", "--data", path, "--jobs", "4"});
  EXPECT_EQ(serial.code, kExitOk);
  EXPECT_EQ(serial.out, parallel.out);
  std::istringstream lines(serial.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    EXPECT_TRUE(nlohmann::json::parse(line).contains("classification"));
    ++count;
  }
  EXPECT_EQ(count, 6);
  EXPECT_EQ(Cli({"ingest", "--input", path}).out,
            "accepted 300, rejected 0, forums 6, users 60\n");
}

}  // namespace
}  // namespace forummatrix
