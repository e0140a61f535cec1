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

#include "rsbm/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "rsbm/errors.hpp"
#include "rsbm/experiment.hpp"

namespace rsbm {
namespace {

namespace fs = std::filesystem;

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("rsbm_io_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

TEST(EdgeList, RoundTrip) {
  const LabeledGraph g(5, {{3, 1}, {0, 4}, {1, 2}});
  const std::string text = edge_list_string(g);
  EXPECT_EQ(text, "# N=5\n0 4\n1 2\n1 3\n");
  std::istringstream is(text);
  EXPECT_EQ(read_edge_list(is), g);
}

TEST(EdgeList, ToleratesOrderAndRejectsGarbage) {
  std::istringstream unordered("# N=4\n3 2\n\n0 1\n");
  EXPECT_EQ(read_edge_list(unordered), LabeledGraph(4, {{0, 1}, {2, 3}}));
  std::istringstream no_header("0 1\n");
  EXPECT_THROW(read_edge_list(no_header), ValidationError);
  std::istringstream bad_vertex("# N=2\n0 5\n");
  EXPECT_THROW(read_edge_list(bad_vertex), ValidationError);
  std::istringstream junk("# N=3\n0 x\n");
  EXPECT_THROW(read_edge_list(junk), ValidationError);
}

TEST(PartitionFile, RoundTrip) {
  const auto p = ClusterPartition::from_blocks({{5, 0}, {1, 3}, {2, 4}});
  const std::string text = partition_string(p);
  EXPECT_EQ(text, "0 5\n1 3\n2 4\n");
  std::istringstream is(text);
  EXPECT_EQ(read_partition(is), p);
  std::istringstream uneven("0 1\n2\n");
  EXPECT_THROW(read_partition(uneven), ValidationError);
}

TEST(Params, JsonRoundTripAndSchema) {
  const RsbmParams params{4, make_degree_matrix({{2, 1, 1}, {1, 1, 2}, {1, 2, 1}})};
  const Json j = params_to_json(params);
  EXPECT_EQ(j, Json::parse(R"({"n":4,"k":3,"A":[[2,1,1],[1,1,2],[1,2,1]]})"));
  const RsbmParams back = params_from_json(j);
  EXPECT_EQ(back.n, 4);
  EXPECT_EQ(back.matrix, params.matrix);
  EXPECT_THROW(params_from_json(Json::parse(R"({"n":4,"k":2,"A":[[1,1,1]]})")), ValidationError);
  EXPECT_THROW(params_from_json(Json::parse(R"({"n":"4","k":1,"A":[[1]]})")), ValidationError);
  EXPECT_THROW(params_from_json(Json::parse(R"({"k":1,"A":[[1]]})")), ValidationError);
}

TEST_F(TempDir, LoadParamsErrors) {
  EXPECT_THROW(load_params(dir_ / "missing.json"), IoError);
  save_text(dir_ / "broken.json", "{not json");
  EXPECT_THROW(load_params(dir_ / "broken.json"), ValidationError);
  save_text(dir_ / "invalid.json", R"({"n":3,"k":3,"A":[[1,2,1],[2,1,1],[1,1,1]]})");
  EXPECT_THROW(load_params(dir_ / "invalid.json"), ValidationError);
  save_text(dir_ / "ok.json", R"({"n":2,"k":3,"A":[[1,1,1],[1,1,1],[1,1,1]]})");
  EXPECT_EQ(load_params(dir_ / "ok.json").degree(), 3);
}

TEST_F(TempDir, FileHelpers) {
  const LabeledGraph g(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  save_text(dir_ / "g.txt", edge_list_string(g));
  EXPECT_EQ(load_edge_list(dir_ / "g.txt"), g);
  EXPECT_THROW(load_edge_list(dir_ / "nope.txt"), IoError);
  const auto p = ClusterPartition::from_blocks({{0, 2}, {1, 3}});
  save_text(dir_ / "p.txt", partition_string(p));
  EXPECT_EQ(load_partition(dir_ / "p.txt"), p);
  EXPECT_THROW(save_text(dir_ / "no" / "such" / "dir.txt", "x"), IoError);
}

TEST(InlineJson, GraphAndPartition) {
  const LabeledGraph g(3, {{0, 2}, {0, 1}});
  const Json j = graph_to_json(g);
  EXPECT_EQ(j, Json::parse(R"({"N":3,"edges":[[0,1],[0,2]]})"));
  EXPECT_EQ(graph_from_json(j), g);
  const auto p = ClusterPartition::from_blocks({{1, 2}, {0, 3}});
  EXPECT_EQ(partition_from_json(partition_to_json(p)), p);
}

TEST(InlineJson, BigCounts) {
  EXPECT_EQ(big_count_to_json(BigCount(19355)), Json(19355));
  BigCount huge = 1;
  for (int i = 0; i < 100; ++i) huge *= 3;
  const Json j = big_count_to_json(huge);
  ASSERT_TRUE(j.is_string());
  EXPECT_EQ(BigCount(j.get<std::string>()), huge);
}

TEST(ReportJson, CarriesFields) {
  const Json bound = support_measure_bound({2, DegreeMatrix::Ones(3, 3)});
  EXPECT_TRUE(bound.contains("r_k"));
  EXPECT_TRUE(bound.contains("decay_rate"));
  const Json hyp = check_uniqueness_hypotheses(DegreeMatrix::Ones(3, 3));
  EXPECT_TRUE(hyp.at("pass").get<bool>());
  const Json chi = chi_square_uniform({10, 12, 8});
  EXPECT_EQ(chi.at("counts"), Json::parse("[10,12,8]"));
}

TEST_F(TempDir, ExperimentLogAppendsAndParses) {
  const fs::path log = dir_ / "log.jsonl";
  ExperimentRecord a{"2026-01-01T00:00:00Z", "enumerate", Json{{"n", 4}}, Json{{"count", 3}}};
  ExperimentRecord b{"2026-01-01T00:00:01Z", "analyze", Json{{"x", 1}}, Json{{"y", 2}}};
  append_record(log, a);
  append_record(log, b);
  const auto records = read_records(log);
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].subcommand, "enumerate");
  EXPECT_EQ(records[1].result, b.result);
  EXPECT_EQ(records[1].version, kVersion);
  const std::string text = read_text(log);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 2);
  const Json line = record_to_json(a);
  for (const char* key : {"timestamp", "subcommand", "config", "result", "version"})
    EXPECT_TRUE(line.contains(key)) << key;
  EXPECT_EQ(utc_timestamp().size(), 20u);
}

}  // namespace
}  // namespace rsbm
