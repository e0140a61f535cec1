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

#include "rsbm/oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "rsbm/errors.hpp"

namespace rsbm {
namespace {

// Brute force over all edge subsets of K_n.
long brute_regular(int n, int d) {
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.push_back({u, v});
  long count = 0;
  for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
    std::vector<int> deg(n, 0);
    for (std::size_t e = 0; e < all.size(); ++e) {
      if (mask >> e & 1) {
        ++deg[all[e].first];
        ++deg[all[e].second];
      }
    }
    count += std::all_of(deg.begin(), deg.end(), [d](int x) { return x == d; });
  }
  return count;
}

// Brute force over all n x n 0/1 biadjacency matrices.
long brute_bipartite(int n, int d) {
  long count = 0;
  for (std::uint32_t mask = 0; mask < (1u << (n * n)); ++mask) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      int row = 0;
      int col = 0;
      for (int j = 0; j < n; ++j) {
        row += mask >> (i * n + j) & 1;
        col += mask >> (j * n + i) & 1;
      }
      ok = row == d && col == d;
    }
    count += ok;
  }
  return count;
}

// Brute force over all k^N assignments; counts those with equal block sizes
// whose induced profile equals the matrix.
long brute_membership(const LabeledGraph& g, const DegreeMatrix& a, int n) {
  const int k = static_cast<int>(a.rows());
  const int N = g.num_vertices();
  long total = 1;
  for (int i = 0; i < N; ++i) total *= k;
  long count = 0;
  std::vector<int> assign(N);
  for (long code = 0; code < total; ++code) {
    long c = code;
    std::vector<int> sizes(k, 0);
    for (int v = 0; v < N; ++v) {
      assign[v] = static_cast<int>(c % k);
      c /= k;
      ++sizes[assign[v]];
    }
    if (std::any_of(sizes.begin(), sizes.end(), [n](int s) { return s != n; })) continue;
    bool ok = true;
    for (int v = 0; v < N && ok; ++v) {
      std::vector<int> to(k, 0);
      for (int w = 0; w < N; ++w)
        if (g.has_edge(v, w)) ++to[assign[w]];
      for (int j = 0; j < k; ++j) ok = ok && to[j] == a(assign[v], j);
    }
    count += ok;
  }
  return count;
}

LabeledGraph prism() {
  return LabeledGraph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

LabeledGraph k33() {
  std::vector<Edge> edges;
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 6; ++v) edges.push_back({u, v});
  return LabeledGraph(6, edges);
}

const DegreeMatrix kOnes = make_degree_matrix({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});

TEST(EnumerateRegular, KnownValues) {
  EXPECT_EQ(enumerate_regular(4, 3).count, 1);
  EXPECT_EQ(enumerate_regular(4, 2).count, 3);
  EXPECT_EQ(enumerate_regular(6, 2).count, 70);
  EXPECT_EQ(enumerate_regular(8, 3).count, 19355);
  EXPECT_EQ(enumerate_regular(10, 3).count, 11180820);
  EXPECT_EQ(enumerate_regular(5, 3).count, 0);
  EXPECT_EQ(enumerate_regular(3, 3).count, 0);
  EXPECT_EQ(enumerate_regular(5, 0).count, 1);
}

TEST(EnumerateRegular, SixVerticesDegreeTwoDecomposes) {
  // 60 labeled 6-cycles plus 10 pairs of disjoint triangles.
  const auto r = enumerate_regular(6, 2, true);
  ASSERT_EQ(r.graphs.size(), 70u);
  int connected = 0;
  for (const auto& g : r.graphs) connected += g.is_connected();
  EXPECT_EQ(connected, 60);
}

TEST(EnumerateRegular, MatchesEdgeSubsetBruteForce) {
  for (int n = 1; n <= 6; ++n)
    for (int d = 0; d < n; ++d) EXPECT_EQ(enumerate_regular(n, d).count, brute_regular(n, d)) << n << "," << d;
}

TEST(EnumerateRegular, ComplementBijection) {
  for (int n = 2; n <= 9; ++n)
    for (int d = 0; d < n; ++d)
      EXPECT_EQ(enumerate_regular(n, d).count, enumerate_regular(n, n - 1 - d).count) << n << "," << d;
}

TEST(EnumerateRegular, MaterializedListIsSortedDistinctAndRegular) {
  const auto r = enumerate_regular(6, 3, true);
  EXPECT_EQ(BigCount(r.graphs.size()), r.count);
  EXPECT_TRUE(std::is_sorted(r.graphs.begin(), r.graphs.end()));
  EXPECT_EQ(std::adjacent_find(r.graphs.begin(), r.graphs.end()), r.graphs.end());
  for (const auto& g : r.graphs) EXPECT_EQ(g.regular_degree(), 3);
  std::set<LabeledGraph> complements;
  for (const auto& g : enumerate_regular(6, 2, true).graphs) complements.insert(g.complement());
  EXPECT_EQ(complements, std::set<LabeledGraph>(r.graphs.begin(), r.graphs.end()));
}

TEST(EnumerateRegular, CapExceeded) {
  EXPECT_THROW(enumerate_regular(11, 2), CapExceeded);
  OracleCaps caps;
  caps.regular_n = 12;
  EXPECT_EQ(enumerate_regular(12, 1, false, caps).count, 10395);  // 11!!
}

TEST(EnumerateBipartite, KnownValues) {
  EXPECT_EQ(enumerate_bipartite_regular(3, 1).count, 6);
  EXPECT_EQ(enumerate_bipartite_regular(3, 3).count, 1);
  EXPECT_EQ(enumerate_bipartite_regular(3, 2).count, 6);
  EXPECT_EQ(enumerate_bipartite_regular(4, 2).count, 90);
  EXPECT_EQ(enumerate_bipartite_regular(5, 2).count, 2040);
  EXPECT_EQ(enumerate_bipartite_regular(6, 3).count, 297200);
  EXPECT_EQ(enumerate_bipartite_regular(7, 3).count, 68938800);
  EXPECT_EQ(enumerate_bipartite_regular(3, 4).count, 0);
  EXPECT_THROW(enumerate_bipartite_regular(8, 1), CapExceeded);
}

TEST(EnumerateBipartite, MatchesMatrixBruteForce) {
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= n; ++d)
      EXPECT_EQ(enumerate_bipartite_regular(n, d).count, brute_bipartite(n, d)) << n << "," << d;
}

TEST(EnumerateBipartite, ComplementBijectionAndMaterialization) {
  for (int n = 1; n <= 6; ++n)
    for (int d = 0; d <= n; ++d)
      EXPECT_EQ(enumerate_bipartite_regular(n, d).count, enumerate_bipartite_regular(n, n - d).count);
  const auto r = enumerate_bipartite_regular(3, 2, true);
  ASSERT_EQ(r.graphs.size(), 6u);
  for (const auto& g : r.graphs) {
    EXPECT_EQ(g.regular_degree(), 2);
    for (const auto& [u, v] : g.edges()) {
      EXPECT_LT(u, 3);
      EXPECT_GE(v, 3);
    }
  }
}

TEST(CountPairings, Values) {
  EXPECT_EQ(count_pairings(2, 2, false), 3);
  EXPECT_EQ(count_pairings(2, 1, true), 2);
  EXPECT_EQ(count_pairings(3, 2, false), 15);
  EXPECT_EQ(count_pairings(3, 3, true), 362880);
  EXPECT_THROW(count_pairings(3, 1, false), ValidationError);
}

TEST(CountOrderedPartitions, Values) {
  EXPECT_EQ(count_ordered_partitions(2, 3), 90);
  EXPECT_EQ(count_ordered_partitions(4, 3), 34650);
  EXPECT_EQ(count_ordered_partitions(1, 4), 24);
}

TEST(SymmetryGroup, Orders) {
  EXPECT_EQ(symmetry_group(kOnes).size(), 6u);
  const auto g = symmetry_group(make_degree_matrix({{2, 1, 1}, {1, 1, 2}, {1, 2, 1}}));
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0], (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(g[1], (std::vector<int>{0, 2, 1}));
  EXPECT_EQ(symmetry_group(make_degree_matrix({{3, 1, 0}, {1, 1, 2}, {0, 2, 2}})).size(), 1u);
}

TEST(SupportMembership, PrismMatchesBruteForce) {
  const RsbmParams params{2, kOnes};
  const auto r = support_membership(prism(), params, false);
  EXPECT_EQ(r.examined, 90u);
  EXPECT_EQ(long(r.valid_count), brute_membership(prism(), kOnes, 2));
  const auto planted = ClusterPartition::from_blocks({{0, 3}, {1, 4}, {2, 5}});
  EXPECT_NE(std::find(r.valid.begin(), r.valid.end(), planted), r.valid.end());

  const auto reduced = support_membership(prism(), params, true);
  EXPECT_EQ(reduced.valid_count, r.valid_count);
  EXPECT_EQ(reduced.symmetry_group_order, 6);
  EXPECT_EQ(reduced.symmetry_reduced_count * 6, r.valid_count);
  EXPECT_EQ(reduced.valid.size(), reduced.symmetry_reduced_count);
}

TEST(SupportMembership, CompleteBipartiteMatchesBruteForce) {
  const RsbmParams params{2, kOnes};
  const auto r = support_membership(k33(), params, false);
  EXPECT_EQ(long(r.valid_count), brute_membership(k33(), kOnes, 2));
  for (const auto& p : r.valid)
    for (const auto& block : p.blocks()) EXPECT_NE(block[0] < 3, block[1] < 3);
}

TEST(SupportMembership, RejectsWrongSizeAndCap) {
  const RsbmParams params{2, kOnes};
  EXPECT_THROW(support_membership(LabeledGraph(4, {}), params, false), ValidationError);
  OracleCaps caps;
  caps.partitions = 50;
  EXPECT_THROW(support_membership(prism(), params, false, caps), CapExceeded);
}

TEST(SupportMembership, RawCountsDivisibleBySymmetryOrder) {
  RngStream rng(21);
  const std::vector<DegreeMatrix> matrices = {
      make_degree_matrix({{2, 1, 1}, {1, 2, 1}, {1, 1, 2}}),
      make_degree_matrix({{2, 1, 1}, {1, 1, 2}, {1, 2, 1}}),
  };
  for (const auto& a : matrices) {
    const RsbmParams params{4, a};
    const auto order = symmetry_group(a).size();
    for (int i = 0; i < 4; ++i) {
      const RsbmSample s = sample_rsbm(params, rng);
      const auto raw = support_membership(s.graph, params, false);
      const auto reduced = support_membership(s.graph, params, true);
      EXPECT_GE(raw.valid_count, order);
      EXPECT_EQ(raw.valid_count % order, 0u);
      EXPECT_EQ(reduced.valid_count, raw.valid_count);
      EXPECT_EQ(reduced.symmetry_reduced_count * order, raw.valid_count);
      EXPECT_NE(std::find(raw.valid.begin(), raw.valid.end(), s.partition), raw.valid.end());
    }
  }
}

TEST(FindValidPartition, AgreesWithMembership) {
  const RsbmParams params{2, kOnes};
  const auto p = find_valid_partition(prism(), params);
  ASSERT_TRUE(p.has_value());
  EXPECT_TRUE(matches_profile(prism(), p->assignment(), kOnes));
  const LabeledGraph hexagon(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  EXPECT_FALSE(find_valid_partition(hexagon, params).has_value());
  EXPECT_EQ(brute_membership(hexagon, kOnes, 2), 0);
  EXPECT_TRUE(find_valid_partition(k33(), params).has_value());
}

TEST(UniquenessCensus, PrismMatchesBruteForce) {
  const RsbmParams params{2, kOnes};
  const auto planted = ClusterPartition::from_blocks({{0, 3}, {1, 4}, {2, 5}});
  const auto c = uniqueness_census(prism(), params, planted);
  const long brute = brute_membership(prism(), kOnes, 2);
  EXPECT_EQ(long(c.raw_valid), brute);
  EXPECT_EQ(long(c.raw_extra), brute - 1);
  EXPECT_EQ(long(c.reduced_valid), brute / 6);
  EXPECT_EQ(c.reduced_extra, c.reduced_valid - 1);
  EXPECT_GE(c.raw_extra, 5u);
  EXPECT_EQ(c.unique(), brute == 6);

  const auto invalid = ClusterPartition::from_blocks({{0, 1}, {2, 3}, {4, 5}});
  EXPECT_THROW(uniqueness_census(prism(), params, invalid), ValidationError);
}

TEST(ChiSquare, StatisticAndPValue) {
  const auto flat = chi_square_uniform({100, 100, 100});
  EXPECT_DOUBLE_EQ(flat.statistic, 0.0);
  EXPECT_DOUBLE_EQ(flat.p_value, 1.0);
  EXPECT_EQ(flat.degrees_of_freedom, 2);

  const auto skew = chi_square_uniform({120, 80});
  EXPECT_NEAR(skew.statistic, 8.0, 1e-12);
  EXPECT_NEAR(skew.p_value, std::erfc(2.0), 1e-12);  // dof 1: erfc(sqrt(x/2))

  const auto three = chi_square_uniform({50, 30, 40});
  EXPECT_NEAR(three.statistic, 5.0, 1e-12);
  EXPECT_NEAR(three.p_value, std::exp(-2.5), 1e-12);  // dof 2: exp(-x/2)
}

TEST(EmpiricalUniformity, FourCyclesAreUniform) {
  RngStream rng(22);
  const auto r = empirical_uniformity_test(4, 2, false, 9000, rng);
  EXPECT_EQ(r.cells, 3);
  EXPECT_EQ(r.samples, 9000);
  EXPECT_EQ(std::accumulate(r.counts.begin(), r.counts.end(), 0L), 9000);
  EXPECT_GT(r.p_value, 1e-3);
}

}  // namespace
}  // namespace rsbm
