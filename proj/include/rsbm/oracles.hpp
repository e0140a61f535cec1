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

#ifndef RSBM_ORACLES_HPP_
#define RSBM_ORACLES_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rsbm/model.hpp"
#include "rsbm/rng.hpp"
#include "rsbm/samplers.hpp"

namespace rsbm {

using BigCount = boost::multiprecision::cpp_int;

// Size limits for the exhaustive routines. These are configuration, not
// hard limits of the algorithms.
struct OracleCaps {
  int regular_n = 10;
  int bipartite_n = 7;
  std::uint64_t partitions = 1'000'000;
  std::size_t listed_partitions = 1000;
};

struct EnumerationResult {
  BigCount count;
  // Filled only when materialization was requested, in lexicographic order
  // of edge lists.
  std::vector<LabeledGraph> graphs;
};

// Labeled simple d-regular graphs on n vertices.
EnumerationResult enumerate_regular(int n, int d, bool materialize = false,
                                    const OracleCaps& caps = {});

// Labeled d-regular bipartite graphs with sides [0, n) and [n, 2n).
EnumerationResult enumerate_bipartite_regular(int n, int d,
                                              bool materialize = false,
                                              const OracleCaps& caps = {});

// (nd - 1)!! one-sided, (nd)! bipartite.
BigCount count_pairings(int n, int d, bool bipartite);

// Number of ordered partitions of k*n labeled vertices into k blocks of n.
BigCount count_ordered_partitions(int n, int k);

// Cluster relabelings sigma with a[sigma(i)][sigma(j)] == a[i][j], identity
// first.
std::vector<std::vector<int>> symmetry_group(const DegreeMatrix& matrix);

// True iff every vertex in cluster c has exactly matrix(c, j) neighbours in
// cluster j, i.e. the induced profile exists and equals the matrix.
bool matches_profile(const LabeledGraph& graph, std::span<const int> assignment,
                     const DegreeMatrix& matrix);

struct MembershipResult {
  std::uint64_t examined = 0;     // partitions visited by the search
  std::uint64_t valid_count = 0;  // ordered valid partitions, all labelings
  std::uint64_t symmetry_reduced_count = 0;
  int symmetry_group_order = 1;
  bool dedup_symmetry = false;
  // Up to caps.listed_partitions entries. Canonical representatives only
  // when dedup_symmetry is set.
  std::vector<ClusterPartition> valid;
  std::uint64_t overflow = 0;

  bool in_support() const { return valid_count > 0; }
};

// Exhaustive search over ordered partitions into k blocks of n. Throws
// CapExceeded when (kn)!/(n!)^k exceeds caps.partitions.
MembershipResult support_membership(const LabeledGraph& graph,
                                    const RsbmParams& params,
                                    bool dedup_symmetry,
                                    const OracleCaps& caps = {});

// First valid partition in search order, or nullopt.
std::optional<ClusterPartition> find_valid_partition(
    const LabeledGraph& graph, const RsbmParams& params,
    const OracleCaps& caps = {});

struct CensusReport {
  std::uint64_t raw_valid = 0;
  std::uint64_t raw_extra = 0;
  std::uint64_t reduced_valid = 0;
  std::uint64_t reduced_extra = 0;
  int symmetry_group_order = 1;

  // No clustering other than relabelings of the planted one.
  bool unique() const { return reduced_extra == 0; }
};

// Counts valid partitions besides `planted`. Throws ValidationError if the
// planted partition itself is not valid.
CensusReport uniqueness_census(const LabeledGraph& graph,
                               const RsbmParams& params,
                               const ClusterPartition& planted,
                               const OracleCaps& caps = {});

struct ChiSquareReport {
  int cells = 0;
  long samples = 0;
  std::vector<long> counts;
  long unmatched = 0;  // draws not found in the enumerated list
  double statistic = 0.0;
  int degrees_of_freedom = 0;
  double p_value = 1.0;
};

// Pearson statistic against the uniform distribution over counts.size()
// cells.
ChiSquareReport chi_square_uniform(std::vector<long> counts);

// Tallies simple-conditioned sampler output against the enumerated graphs.
ChiSquareReport empirical_uniformity_test(
    int n, int d, bool bipartite, long samples, RngStream& rng,
    long max_attempts = kDefaultMaxAttempts, const OracleCaps& caps = {});

}  // namespace rsbm

#endif  // RSBM_ORACLES_HPP_
