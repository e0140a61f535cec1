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

#ifndef RSBM_IO_HPP_
#define RSBM_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "rsbm/analysis.hpp"
#include "rsbm/model.hpp"
#include "rsbm/oracles.hpp"

namespace rsbm {

using Json = nlohmann::json;

// {"n": int, "k": int, "A": [[int]]}. params_from_json checks the schema
// only; load_params additionally validates the model.
Json params_to_json(const RsbmParams& params);
RsbmParams params_from_json(const Json& j);
RsbmParams load_params(const std::filesystem::path& path);

// Edge list: header "# N=<int>", then one "u v" line per edge with u < v in
// lexicographic order.
void write_edge_list(std::ostream& os, const LabeledGraph& graph);
LabeledGraph read_edge_list(std::istream& is);

// One line per cluster in cluster order, ascending space-separated ids.
void write_partition(std::ostream& os, const ClusterPartition& partition);
ClusterPartition read_partition(std::istream& is);

LabeledGraph load_edge_list(const std::filesystem::path& path);
ClusterPartition load_partition(const std::filesystem::path& path);
void save_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

std::string edge_list_string(const LabeledGraph& graph);
std::string partition_string(const ClusterPartition& partition);

// Inline JSON forms used in reports and replayable configs.
Json graph_to_json(const LabeledGraph& graph);
LabeledGraph graph_from_json(const Json& j);
Json partition_to_json(const ClusterPartition& partition);
ClusterPartition partition_from_json(const Json& j);

// Exact counts are emitted as numbers when they fit in 64 bits, otherwise
// as decimal strings.
Json big_count_to_json(const BigCount& count);

void to_json(Json& j, const ValidationReport& r);
void to_json(Json& j, const MembershipResult& r);
void to_json(Json& j, const CensusReport& r);
void to_json(Json& j, const ChiSquareReport& r);
void to_json(Json& j, const GmHmCheck& r);
void to_json(Json& j, const BoundReport& r);
void to_json(Json& j, const SpectralReport& r);
void to_json(Json& j, const HypothesisReport& r);
void to_json(Json& j, const WilsonInterval& r);
void to_json(Json& j, const TvReport& r);

}  // namespace rsbm

#endif  // RSBM_IO_HPP_
