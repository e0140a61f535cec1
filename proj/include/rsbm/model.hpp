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

#ifndef RSBM_MODEL_HPP_
#define RSBM_MODEL_HPP_

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace rsbm {

using Vertex = int;
// Undirected edge; stored with first <= second.
using Edge = std::pair<Vertex, Vertex>;

// k x k symmetric matrix of positive integers with constant row sum. Entry
// (i, j) is the number of neighbours a vertex of cluster i has in cluster j.
using DegreeMatrix = Eigen::MatrixXi;

DegreeMatrix make_degree_matrix(const std::vector<std::vector<int>>& rows);
std::vector<std::vector<int>> to_rows(const DegreeMatrix& matrix);

struct RsbmParams {
  int n = 0;  // vertices per cluster
  DegreeMatrix matrix;

  int k() const { return static_cast<int>(matrix.rows()); }
  int num_vertices() const { return k() * n; }
  // Common row sum. Only meaningful for valid parameters.
  int degree() const { return matrix.rows() > 0 ? matrix.row(0).sum() : 0; }
};

enum class IssueKind {
  kShape,
  kAsymmetric,
  kNonPositive,
  kUnequalRowSums,
  kParity,
  kInfeasible,
};

std::string to_string(IssueKind kind);

struct ValidationIssue {
  IssueKind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  std::vector<std::string> warnings;
  int degree = 0;  // row sum when constant, else 0

  bool valid() const { return issues.empty(); }
  bool has(IssueKind kind) const;
  std::vector<std::string> messages() const;
};

// Checks shape, symmetry, positivity and row-sum constancy of a bare matrix.
ValidationReport validate_matrix(const DegreeMatrix& matrix);

// Full model check: matrix invariants plus parity (n * a_ii even) and
// simple-graph feasibility (a_ii <= n - 1, a_ij <= n). Entries below 3 only
// produce a warning.
ValidationReport validate_params(const RsbmParams& params);

// Throws ValidationError listing every violation.
void require_valid(const RsbmParams& params);
void require_valid(const DegreeMatrix& matrix);

// Simple undirected graph on vertices [0, N). Edges are kept sorted.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  // Normalizes each edge to u < v and sorts. Throws ValidationError on
  // loops, duplicates, or out-of-range endpoints.
  LabeledGraph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;
  // Constant degree, or nullopt if the graph is irregular.
  std::optional<int> regular_degree() const;
  bool is_connected() const;
  LabeledGraph complement() const;

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.num_vertices_ == b.num_vertices_ && a.edges_ == b.edges_;
  }
  friend auto operator<=>(const LabeledGraph& a, const LabeledGraph& b) {
    if (auto c = a.num_vertices_ <=> b.num_vertices_; c != 0) return c;
    return a.edges_ <=> b.edges_;
  }

 private:
  int num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// Multigraph produced by the pairing process. Loops and parallel edges are
// allowed; a loop contributes 2 to the degree of its vertex.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(int num_vertices) : num_vertices_(num_vertices) {}

  void add_edge(Vertex u, Vertex v);
  int num_vertices() const { return num_vertices_; }
  std::span<const Edge> edges() const { return edges_; }
  std::vector<int> degrees() const;

 private:
  int num_vertices_ = 0;
  std::vector<Edge> edges_;
};

// Ordered assignment of N vertices into k clusters of equal size.
class ClusterPartition {
 public:
  ClusterPartition() = default;
  // Throws ValidationError unless every label in [0, k) occurs N / k times.
  ClusterPartition(std::vector<int> assignment, int num_clusters);
  static ClusterPartition from_blocks(
      const std::vector<std::vector<Vertex>>& blocks);

  int num_clusters() const { return num_clusters_; }
  int num_vertices() const { return static_cast<int>(assignment_.size()); }
  int block_size() const {
    return num_clusters_ > 0 ? num_vertices() / num_clusters_ : 0;
  }
  int cluster_of(Vertex v) const { return assignment_[v]; }
  std::span<const int> assignment() const { return assignment_; }
  // Vertex ids of each cluster, ascending.
  std::vector<std::vector<Vertex>> blocks() const;

  friend bool operator==(const ClusterPartition&,
                         const ClusterPartition&) = default;

 private:
  std::vector<int> assignment_;
  int num_clusters_ = 0;
};

// The first vertex (in (cluster, target cluster, vertex id) order) whose
// degree toward target_cluster differs from the value set by the lowest-id
// vertex of its cluster.
struct ProfileFailure {
  int cluster = 0;
  int target_cluster = 0;
  Vertex vertex = 0;
  Vertex reference_vertex = 0;
  int expected = 0;
  int actual = 0;
};

struct ProfileResult {
  std::optional<Eigen::MatrixXi> profile;
  std::optional<ProfileFailure> failure;

  bool ok() const { return profile.has_value(); }
};

// Per-cluster-pair constant degree matrix of `graph` under `partition`.
// Throws ValidationError on vertex-count mismatch.
ProfileResult induced_degree_profile(const LabeledGraph& graph,
                                     const ClusterPartition& partition);

// Dense adjacency matrix in the requested scalar type.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> adjacency_matrix(
    const LabeledGraph& graph) {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Matrix adj = Matrix::Zero(graph.num_vertices(), graph.num_vertices());
  for (const auto& [u, v] : graph.edges()) {
    adj(u, v) = Scalar(1);
    adj(v, u) = Scalar(1);
  }
  return adj;
}

}  // namespace rsbm

#endif  // RSBM_MODEL_HPP_
