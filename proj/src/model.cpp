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

#include "rsbm/model.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "rsbm/errors.hpp"

namespace rsbm {

DegreeMatrix make_degree_matrix(const std::vector<std::vector<int>>& rows) {
  const auto k = static_cast<Eigen::Index>(rows.size());
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != k) {
      throw ValidationError("degree matrix must be square",
                            {"row length differs from row count"});
    }
  }
  DegreeMatrix m(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) m(i, j) = rows[i][j];
  return m;
}

std::vector<std::vector<int>> to_rows(const DegreeMatrix& matrix) {
  std::vector<std::vector<int>> rows(matrix.rows(),
                                     std::vector<int>(matrix.cols()));
  for (Eigen::Index i = 0; i < matrix.rows(); ++i)
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) rows[i][j] = matrix(i, j);
  return rows;
}

std::string to_string(IssueKind kind) {
  switch (kind) {
    case IssueKind::kShape: return "shape";
    case IssueKind::kAsymmetric: return "asymmetric";
    case IssueKind::kNonPositive: return "non_positive";
    case IssueKind::kUnequalRowSums: return "unequal_row_sums";
    case IssueKind::kParity: return "parity";
    case IssueKind::kInfeasible: return "infeasible";
  }
  return "unknown";
}

bool ValidationReport::has(IssueKind kind) const {
  return std::any_of(issues.begin(), issues.end(),
                     [kind](const auto& issue) { return issue.kind == kind; });
}

std::vector<std::string> ValidationReport::messages() const {
  std::vector<std::string> out;
  out.reserve(issues.size());
  for (const auto& issue : issues) out.push_back(issue.message);
  return out;
}

namespace {

template <typename... Args>
std::string cat(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

}  // namespace

ValidationReport validate_matrix(const DegreeMatrix& a) {
  ValidationReport report;
  const Eigen::Index k = a.rows();
  if (k == 0 || a.cols() != k) {
    report.issues.push_back(
        {IssueKind::kShape, cat("matrix is ", a.rows(), "x", a.cols(),
                                ", expected non-empty square")});
    return report;
  }
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = i + 1; j < k; ++j) {
      if (a(i, j) != a(j, i)) {
        report.issues.push_back(
            {IssueKind::kAsymmetric, cat("a[", i, "][", j, "]=", a(i, j),
                                         " != a[", j, "][", i, "]=", a(j, i))});
      }
    }
  }
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      if (a(i, j) <= 0) {
        report.issues.push_back({IssueKind::kNonPositive,
                                 cat("a[", i, "][", j, "]=", a(i, j),
                                     " is not strictly positive")});
      }
    }
  }
  const Eigen::VectorXi sums = a.rowwise().sum();
  if ((sums.array() != sums(0)).any()) {
    std::ostringstream os;
    os << "row sums differ:";
    for (Eigen::Index i = 0; i < k; ++i) os << ' ' << sums(i);
    report.issues.push_back({IssueKind::kUnequalRowSums, os.str()});
  } else {
    report.degree = sums(0);
  }
  if (a.minCoeff() < 3) {
    report.warnings.push_back(
        "entries below 3: connectivity is not guaranteed asymptotically");
  }
  return report;
}

ValidationReport validate_params(const RsbmParams& params) {
  ValidationReport report = validate_matrix(params.matrix);
  if (params.n <= 0) {
    report.issues.push_back(
        {IssueKind::kShape, cat("n=", params.n, " must be positive")});
    return report;
  }
  if (report.has(IssueKind::kShape)) return report;
  const auto& a = params.matrix;
  const int n = params.n;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    if ((static_cast<long>(n) * a(i, i)) % 2 != 0) {
      report.issues.push_back(
          {IssueKind::kParity, cat("n*a[", i, "][", i, "]=", n * a(i, i),
                                   " is odd")});
    }
    if (a(i, i) > n - 1) {
      report.issues.push_back(
          {IssueKind::kInfeasible, cat("a[", i, "][", i, "]=", a(i, i),
                                       " exceeds n-1=", n - 1)});
    }
    for (Eigen::Index j = i + 1; j < a.cols(); ++j) {
      if (a(i, j) > n) {
        report.issues.push_back(
            {IssueKind::kInfeasible,
             cat("a[", i, "][", j, "]=", a(i, j), " exceeds n=", n)});
      }
    }
  }
  return report;
}

void require_valid(const RsbmParams& params) {
  auto report = validate_params(params);
  if (!report.valid()) {
    throw ValidationError("invalid model parameters", report.messages());
  }
}

void require_valid(const DegreeMatrix& matrix) {
  auto report = validate_matrix(matrix);
  if (!report.valid()) {
    throw ValidationError("invalid degree matrix", report.messages());
  }
}

// LabeledGraph

LabeledGraph::LabeledGraph(int num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices_ < 0) throw ValidationError("negative vertex count");
  for (auto& [u, v] : edges_) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= num_vertices_) {
      throw ValidationError(cat("edge {", u, ",", v, "} out of range for N=",
                                num_vertices_));
    }
    if (u == v) throw ValidationError(cat("self-loop on vertex ", u));
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end());
      dup != edges_.end()) {
    throw ValidationError(
        cat("duplicate edge {", dup->first, ",", dup->second, "}"));
  }
  adjacency_.assign(num_vertices_, {});
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool LabeledGraph::has_edge(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::optional<int> LabeledGraph::regular_degree() const {
  if (num_vertices_ == 0) return 0;
  const int d = degree(0);
  for (Vertex v = 1; v < num_vertices_; ++v) {
    if (degree(v) != d) return std::nullopt;
  }
  return d;
}

bool LabeledGraph::is_connected() const {
  if (num_vertices_ <= 1) return true;
  std::vector<char> seen(num_vertices_, 0);
  std::queue<Vertex> frontier;
  frontier.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w : adjacency_[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        frontier.push(w);
      }
    }
  }
  return reached == num_vertices_;
}

LabeledGraph LabeledGraph::complement() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < num_vertices_; ++u)
    for (Vertex v = u + 1; v < num_vertices_; ++v)
      if (!has_edge(u, v)) out.emplace_back(u, v);
  return LabeledGraph(num_vertices_, std::move(out));
}

// MultiGraph

void MultiGraph::add_edge(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  edges_.emplace_back(u, v);
}

std::vector<int> MultiGraph::degrees() const {
  std::vector<int> deg(num_vertices_, 0);
  for (const auto& [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

// ClusterPartition

ClusterPartition::ClusterPartition(std::vector<int> assignment,
                                   int num_clusters)
    : assignment_(std::move(assignment)), num_clusters_(num_clusters) {
  if (num_clusters_ <= 0) throw ValidationError("cluster count must be positive");
  const int total = static_cast<int>(assignment_.size());
  if (total % num_clusters_ != 0) {
    throw ValidationError(cat(total, " vertices cannot be split into ",
                              num_clusters_, " equal clusters"));
  }
  std::vector<int> sizes(num_clusters_, 0);
  for (int label : assignment_) {
    if (label < 0 || label >= num_clusters_) {
      throw ValidationError(cat("cluster label ", label, " out of range"));
    }
    ++sizes[label];
  }
  for (int c = 0; c < num_clusters_; ++c) {
    if (sizes[c] != total / num_clusters_) {
      throw ValidationError(cat("cluster ", c, " has ", sizes[c],
                                " vertices, expected ", total / num_clusters_));
    }
  }
}

ClusterPartition ClusterPartition::from_blocks(
    const std::vector<std::vector<Vertex>>& blocks) {
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.size();
  std::vector<int> assignment(total, -1);
  for (std::size_t c = 0; c < blocks.size(); ++c) {
    for (Vertex v : blocks[c]) {
      if (v < 0 || static_cast<std::size_t>(v) >= total) {
        throw ValidationError(cat("vertex ", v, " out of range"));
      }
      if (assignment[v] != -1) {
        throw ValidationError(cat("vertex ", v, " appears in two clusters"));
      }
      assignment[v] = static_cast<int>(c);
    }
  }
  return ClusterPartition(std::move(assignment),
                          static_cast<int>(blocks.size()));
}

std::vector<std::vector<Vertex>> ClusterPartition::blocks() const {
  std::vector<std::vector<Vertex>> out(num_clusters_);
  for (Vertex v = 0; v < num_vertices(); ++v) out[assignment_[v]].push_back(v);
  return out;
}

ProfileResult induced_degree_profile(const LabeledGraph& graph,
                                     const ClusterPartition& partition) {
  if (graph.num_vertices() != partition.num_vertices()) {
    throw ValidationError(cat("graph has ", graph.num_vertices(),
                              " vertices but partition covers ",
                              partition.num_vertices()));
  }
  const int k = partition.num_clusters();
  const int n_total = graph.num_vertices();
  // counts(v, j): neighbours of v in cluster j.
  Eigen::MatrixXi counts = Eigen::MatrixXi::Zero(n_total, k);
  for (const auto& [u, v] : graph.edges()) {
    ++counts(u, partition.cluster_of(v));
    ++counts(v, partition.cluster_of(u));
  }
  const auto blocks = partition.blocks();
  Eigen::MatrixXi profile(k, k);
  for (int i = 0; i < k; ++i) {
    const auto& members = blocks[i];
    for (int j = 0; j < k; ++j) {
      if (members.empty()) {
        profile(i, j) = 0;
        continue;
      }
      const Vertex ref = members.front();
      const int expected = counts(ref, j);
      for (Vertex v : members) {
        if (counts(v, j) != expected) {
          return {std::nullopt,
                  ProfileFailure{i, j, v, ref, expected, counts(v, j)}};
        }
      }
      profile(i, j) = expected;
    }
  }
  return {std::move(profile), std::nullopt};
}

}  // namespace rsbm
