// Copyright 2026 The RSBM Authors.
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

#include "rsbm/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "rsbm/errors.hpp"
#include "rsbm/experiment.hpp"
#include "rsbm/io.hpp"

namespace rsbm {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("rsbm_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    log_ = (dir_ / "log.jsonl").string();
    save_text(dir_ / "ones.json", R"({"n":2,"k":3,"A":[[1,1,1],[1,1,1],[1,1,1]]})");
    save_text(dir_ / "bad.json", R"({"n":3,"k":3,"A":[[1,2,1],[2,1,1],[1,1,1]]})");
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(std::vector<std::string> args) {
    args.insert(args.begin(), "rsbm");
    args.push_back("--log");
    args.push_back(log_);
    out_.str("");
    err_.str("");
    return run_cli(args, out_, err_);
  }
  std::string path(const char* name) const { return (dir_ / name).string(); }

  fs::path dir_;
  std::string log_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(Cli, EnumerateReportsCountAndPairings) {
  ASSERT_EQ(run({"enumerate", "--n", "6", "--d", "2"}), kExitOk);
  const Json j = Json::parse(out_.str());
  EXPECT_EQ(j.at("count"), 70);
  EXPECT_EQ(j.at("pairings"), 10395);
  ASSERT_EQ(run({"enumerate", "--n", "3", "--d", "2", "--bipartite"}), kExitOk);
  EXPECT_EQ(Json::parse(out_.str()).at("count"), 6);
}

TEST_F(Cli, SampleWritesEdgeListAndPartition) {
  const std::string out = path("g.txt");
  ASSERT_EQ(run({"sample", "--config", path("ones.json"), "--seed", "7", "--out", out}), kExitOk);
  const LabeledGraph g = load_edge_list(out);
  const ClusterPartition p = load_partition(out + ".partition");
  EXPECT_EQ(g.regular_degree(), 3);
  EXPECT_EQ(*induced_degree_profile(g, p).profile, DegreeMatrix::Ones(3, 3));

  ASSERT_EQ(run({"membership", "--config", path("ones.json"), "--graph", out}), kExitOk);
  EXPECT_GE(Json::parse(out_.str()).at("valid_count").get<int>(), 6);
  ASSERT_EQ(run({"uniqueness", "--config", path("ones.json"), "--graph", out, "--partition",
                 out + ".partition"}),
            kExitOk);
  EXPECT_GE(Json::parse(out_.str()).at("raw_valid").get<int>(), 6);
  ASSERT_EQ(run({"spectral", "--graph", out}), kExitOk);
  EXPECT_TRUE(Json::parse(out_.str()).contains("gamma"));
}

TEST_F(Cli, SameSeedSamePayload) {
  ASSERT_EQ(run({"sample", "--config", path("ones.json"), "--seed", "11"}), kExitOk);
  const std::string first = out_.str();
  ASSERT_EQ(run({"sample", "--config", path("ones.json"), "--seed", "11"}), kExitOk);
  EXPECT_EQ(out_.str(), first);
}

TEST_F(Cli, AnalyzeReport) {
  ASSERT_EQ(run({"analyze", "--config", path("ones.json")}), kExitOk);
  const Json j = Json::parse(out_.str());
  EXPECT_NEAR(j.at("r_k").get<double>(), 0.683918, 1e-6);
  EXPECT_TRUE(j.at("hypotheses").at("pass").get<bool>());
  EXPECT_TRUE(j.at("gm_hm").at("equality").get<bool>());
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run({"analyze", "--config", path("bad.json")}), kExitValidation);
  Json e = Json::parse(err_.str());
  EXPECT_EQ(e.at("error"), "validation");
  EXPECT_FALSE(e.at("details").empty());

  EXPECT_EQ(run({"analyze", "--config", path("missing.json")}), kExitIo);
  EXPECT_EQ(Json::parse(err_.str()).at("error"), "io");

  EXPECT_EQ(run({"enumerate", "--n", "12", "--d", "3"}), kExitResource);
  e = Json::parse(err_.str());
  EXPECT_EQ(e.at("requested"), 12);
  EXPECT_EQ(e.at("cap"), 10);

  save_text(dir_ / "k5.json", R"({"n":5,"k":1,"A":[[4]]})");
  EXPECT_EQ(run({"sample", "--config", path("k5.json"), "--seed", "1", "--max-attempts", "1"}),
            kExitResource);
  EXPECT_EQ(Json::parse(err_.str()).at("attempts"), 1);

  EXPECT_EQ(run({"sample", "--config", path("ones.json")}), kExitValidation);
  EXPECT_EQ(run({"bogus"}), kExitValidation);
  EXPECT_EQ(run({"spectral", "--graph", path("none.txt")}), kExitIo);
}

TEST_F(Cli, EveryRunIsLoggedAndReplays) {
  ASSERT_EQ(run({"enumerate", "--n", "4", "--d", "2"}), kExitOk);
  ASSERT_EQ(run({"uniformity", "--n", "4", "--d", "2", "--samples", "300", "--seed", "3"}), kExitOk);
  ASSERT_EQ(run({"uniqueness", "--config", path("ones.json"), "--seed", "2", "--samples", "3"}),
            kExitOk);
  ASSERT_EQ(run({"tv-experiment", "--config", path("ones.json"), "--seed", "4", "--samples", "50"}),
            kExitOk);
  ASSERT_EQ(run({"enumerate", "--n", "12", "--d", "3"}), kExitResource);
  ASSERT_EQ(run({"analyze", "--config", path("bad.json")}), kExitValidation);

  auto records = read_records(log_);
  ASSERT_EQ(records.size(), 6u);
  EXPECT_EQ(records[3].subcommand, "tv-experiment");
  EXPECT_EQ(records[4].result.at("error"), "resource");
  EXPECT_TRUE(records[5].config.is_null());
  EXPECT_THROW(replay(records[5]), ValidationError);
  records.pop_back();
  for (const auto& r : records) {
    EXPECT_EQ(r.version, "0.1.0");
    const ReplayOutcome o = replay(r);
    EXPECT_TRUE(o.identical) << r.subcommand;
  }

  ASSERT_EQ(run({"replay", "--index", "1"}), kExitOk);
  const Json j = Json::parse(out_.str());
  EXPECT_TRUE(j.at("identical").get<bool>());
  EXPECT_EQ(j.at("subcommand"), "uniformity");
  EXPECT_EQ(read_records(log_).size(), 6u);
  EXPECT_EQ(run({"replay", "--index", "9"}), kExitValidation);
}

TEST_F(Cli, ExecuteIsPure) {
  const Json config = Json::parse(R"({"n":4,"d":3,"bipartite":true,"cap":7})");
  EXPECT_EQ(execute("enumerate", config).dump(), execute("enumerate", config).dump());
  EXPECT_THROW(execute("enumerate", Json::parse(R"({"n":4})")), ValidationError);
  EXPECT_THROW(execute("nope", config), ValidationError);
}

}  // namespace
}  // namespace rsbm
