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

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "rsbm/errors.hpp"

namespace rsbm {

Json params_to_json(const RsbmParams& params) {
  return Json{{"n", params.n}, {"k", params.k()}, {"A", to_rows(params.matrix)}};
}

RsbmParams params_from_json(const Json& j) {
  std::vector<std::string> problems;
  if (!j.is_object()) throw ValidationError("params must be a JSON object");
  for (const char* key : {"n", "k"}) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
      problems.push_back(std::string("missing or non-integer \"") + key + "\"");
    }
  }
  if (!j.contains("A") || !j["A"].is_array()) {
    problems.push_back("missing or non-array \"A\"");
  }
  if (!problems.empty()) throw ValidationError("malformed params", problems);

  std::vector<std::vector<int>> rows;
  for (const auto& row : j["A"]) {
    if (!row.is_array()) throw ValidationError("rows of \"A\" must be arrays");
    std::vector<int>& out = rows.emplace_back();
    for (const auto& x : row) {
      if (!x.is_number_integer()) {
        throw ValidationError("entries of \"A\" must be integers");
      }
      out.push_back(x.get<int>());
    }
  }
  const int k = j["k"].get<int>();
  if (k != static_cast<int>(rows.size())) {
    std::ostringstream os;
    os << "k=" << k << " but A has " << rows.size() << " rows";
    throw ValidationError("malformed params", {os.str()});
  }
  RsbmParams params;
  params.n = j["n"].get<int>();
  params.matrix = make_degree_matrix(rows);
  return params;
}

RsbmParams load_params(const std::filesystem::path& path) {
  Json j;
  try {
    j = Json::parse(read_text(path));
  } catch (const Json::parse_error& e) {
    throw ValidationError("cannot parse " + path.string(), {e.what()});
  }
  RsbmParams params = params_from_json(j);
  require_valid(params);
  return params;
}

void write_edge_list(std::ostream& os, const LabeledGraph& graph) {
  os << "# N=" << graph.num_vertices() << '\n';
  for (const auto& [u, v] : graph.edges()) os << u << ' ' << v << '\n';
}

LabeledGraph read_edge_list(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("# N=", 0) != 0) {
    throw ValidationError("edge list must start with \"# N=<int>\"");
  }
  int n = 0;
  {
    std::istringstream header(line.substr(4));
    if (!(header >> n) || n < 0) {
      throw ValidationError("bad vertex count in header: " + line);
    }
  }
  std::vector<Edge> edges;
  int line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    Vertex u = 0;
    Vertex v = 0;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra)) {
      std::ostringstream os;
      os << "line " << line_no << ": expected \"u v\", got \"" << line << '"';
      throw ValidationError(os.str());
    }
    edges.emplace_back(u, v);
  }
  return LabeledGraph(n, std::move(edges));
}

void write_partition(std::ostream& os, const ClusterPartition& partition) {
  for (const auto& block : partition.blocks()) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i > 0) os << ' ';
      os << block[i];
    }
    os << '\n';
  }
}

ClusterPartition read_partition(std::istream& is) {
  std::vector<std::vector<Vertex>> blocks;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    auto& block = blocks.emplace_back();
    Vertex v = 0;
    while (fields >> v) block.push_back(v);
    if (!fields.eof()) {
      throw ValidationError("partition line is not a list of ids: " + line);
    }
  }
  return ClusterPartition::from_blocks(blocks);
}

LabeledGraph load_edge_list(const std::filesystem::path& path) {
  std::istringstream is(read_text(path));
  return read_edge_list(is);
}

ClusterPartition load_partition(const std::filesystem::path& path) {
  std::istringstream is(read_text(path));
  return read_partition(is);
}

void save_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot open " + path.string() + " for writing");
  os << text;
  if (!os) throw IoError("failed writing " + path.string());
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << is.rdbuf();
  return buffer.str();
}

std::string edge_list_string(const LabeledGraph& graph) {
  std::ostringstream os;
  write_edge_list(os, graph);
  return os.str();
}

std::string partition_string(const ClusterPartition& partition) {
  std::ostringstream os;
  write_partition(os, partition);
  return os.str();
}

Json graph_to_json(const LabeledGraph& graph) {
  Json edges = Json::array();
  for (const auto& [u, v] : graph.edges()) edges.push_back({u, v});
  return Json{{"N", graph.num_vertices()}, {"edges", std::move(edges)}};
}

LabeledGraph graph_from_json(const Json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  }
  return LabeledGraph(j.at("N").get<int>(), std::move(edges));
}

Json partition_to_json(const ClusterPartition& partition) {
  return partition.blocks();
}

ClusterPartition partition_from_json(const Json& j) {
  return ClusterPartition::from_blocks(
      j.get<std::vector<std::vector<Vertex>>>());
}

Json big_count_to_json(const BigCount& count) {
  if (count <= std::numeric_limits<std::uint64_t>::max()) {
    return count.convert_to<std::uint64_t>();
  }
  return count.str();
}

void to_json(Json& j, const ValidationReport& r) {
  Json issues = Json::array();
  for (const auto& issue : r.issues) {
    issues.push_back({{"kind", to_string(issue.kind)}, {"message", issue.message}});
  }
  j = Json{{"valid", r.valid()},
           {"d", r.degree},
           {"issues", std::move(issues)},
           {"warnings", r.warnings}};
}

void to_json(Json& j, const MembershipResult& r) {
  Json valid = Json::array();
  for (const auto& p : r.valid) valid.push_back(partition_to_json(p));
  j = Json{{"examined", r.examined},
           {"valid_count", r.valid_count},
           {"symmetry_reduced_count", r.symmetry_reduced_count},
           {"symmetry_group_order", r.symmetry_group_order},
           {"dedup_symmetry", r.dedup_symmetry},
           {"in_support", r.in_support()},
           {"valid", std::move(valid)},
           {"overflow", r.overflow}};
}

void to_json(Json& j, const CensusReport& r) {
  j = Json{{"raw_valid", r.raw_valid},
           {"raw_extra", r.raw_extra},
           {"reduced_valid", r.reduced_valid},
           {"reduced_extra", r.reduced_extra},
           {"symmetry_group_order", r.symmetry_group_order},
           {"unique", r.unique()}};
}

void to_json(Json& j, const ChiSquareReport& r) {
  j = Json{{"cells", r.cells},
           {"samples", r.samples},
           {"counts", r.counts},
           {"unmatched", r.unmatched},
           {"statistic", r.statistic},
           {"degrees_of_freedom", r.degrees_of_freedom},
           {"p_value", r.p_value}};
}

void to_json(Json& j, const GmHmCheck& r) {
  j = Json{{"row_margins", r.row_margins},
           {"combined_margin", r.combined_margin},
           {"product_sum_margins", r.product_sum_margins},
           {"holds", r.holds},
           {"equality", r.equality}};
}

void to_json(Json& j, const BoundReport& r) {
  j = Json{{"k", r.k},
           {"n", r.n},
           {"d", r.d},
           {"log2_model_count", r.log2_model_count},
           {"log2_regular_count", r.log2_regular_count},
           {"log2_count_ratio", r.log2_count_ratio},
           {"log2_support_bound", r.log2_support_bound},
           {"r_k", r.ratio},
           {"decay_rate", r.decay_rate},
           {"polynomial_exponent", r.polynomial_exponent}};
}

void to_json(Json& j, const SpectralReport& r) {
  std::vector<double> eig(r.eigenvalues.data(),
                          r.eigenvalues.data() + r.eigenvalues.size());
  j = Json{{"eigenvalues", eig},
           {"lambda_max", r.lambda_max},
           {"lambda2", r.lambda2},
           {"gamma", r.gamma}};
  if (r.worst_ratio) {
    j["worst_ratio"] = *r.worst_ratio;
    j["witness"] = r.witness;
    j["subsets_examined"] = r.subsets_examined;
    j["bound_satisfied"] = r.bound_satisfied;
  }
}

void to_json(Json& j, const HypothesisReport& r) {
  auto margins = [](const std::vector<PairMargin>& v) {
    Json out = Json::array();
    for (const auto& m : v) {
      out.push_back({{"i", m.i}, {"j", m.j}, {"margin", m.margin}, {"ok", m.ok}});
    }
    return out;
  };
  Json thresholds = Json::array();
  for (const auto& t : r.switch_thresholds) {
    thresholds.push_back(
        {{"reference", t.reference}, {"i", t.i}, {"threshold", t.threshold}});
  }
  j = Json{{"B", r.row_max_off_diagonal},
           {"c_star", r.c_star},
           {"homogeneous_diagonal", r.homogeneous_diagonal},
           {"delta_margins", margins(r.delta_margins)},
           {"epsilon_margins", margins(r.epsilon_margins)},
           {"switch_thresholds", std::move(thresholds)},
           {"condition_bounded_ratio", r.condition_bounded_ratio},
           {"condition_heterogeneity", r.condition_heterogeneity},
           {"pass", r.pass},
           {"warnings", r.warnings}};
}

void to_json(Json& j, const WilsonInterval& r) {
  j = Json{{"low", r.low}, {"high", r.high}};
}

void to_json(Json& j, const TvReport& r) {
  j = Json{{"samples", r.samples},
           {"in_support", r.in_support},
           {"p_hat", r.p_hat},
           {"p_interval", r.p_interval},
           {"tv_lower_bound", r.tv_lower_bound},
           {"tv_lower_bound_ci", r.tv_lower_bound_ci},
           {"rsbm_samples", r.rsbm_samples},
           {"rsbm_in_support", r.rsbm_in_support},
           {"rsbm_rate", r.rsbm_rate},
           {"rsbm_interval", r.rsbm_interval},
           {"separated", r.separated}};
}

}  // namespace rsbm
