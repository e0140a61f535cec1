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

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include <boost/math/special_functions/gamma.hpp>

#include "rsbm/errors.hpp"

namespace rsbm {
namespace {

BigCount factorial(int m) {
  BigCount f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

void check_cap(int n, int cap, const char* what) {
  if (n > cap) {
    std::ostringstream os;
    os << what << " enumeration with n=" << n << " exceeds cap " << cap;
    throw CapExceeded(os.str(), n, cap);
  }
}

// Calls visit(chosen) for every size-r subset of [0, m) in lexicographic
// order.
template <typename Visit>
void for_each_subset(int m, int r, Visit&& visit) {
  std::vector<int> chosen(r);
  std::iota(chosen.begin(), chosen.end(), 0);
  if (r > m) return;
  while (true) {
    visit(chosen);
    int i = r - 1;
    while (i >= 0 && chosen[i] == m - r + i) --i;
    if (i < 0) return;
    ++chosen[i];
    for (int j = i + 1; j < r; ++j) chosen[j] = chosen[j - 1] + 1;
  }
}

std::vector<int> normalized(std::vector<int> deficits) {
  deficits.erase(std::remove(deficits.begin(), deficits.end(), 0),
                 deficits.end());
  std::sort(deficits.begin(), deficits.end(), std::greater<>());
  return deficits;
}

// Remaining vertices are interchangeable apart from their deficits, so the
// completion count depends only on the deficit multiset.
class RegularCounter {
 public:
  BigCount count(const std::vector<int>& deficits) {
    if (deficits.empty()) return 1;
    if (auto it = memo_.find(deficits); it != memo_.end()) return it->second;
    const int need = deficits.front();
    const std::vector<int> rest(deficits.begin() + 1, deficits.end());
    BigCount total = 0;
    for_each_subset(static_cast<int>(rest.size()), need,
                    [&](const std::vector<int>& chosen) {
                      std::vector<int> next = rest;
                      for (int idx : chosen) --next[idx];
                      total += count(normalized(std::move(next)));
                    });
    memo_.emplace(deficits, total);
    return total;
  }

 private:
  std::map<std::vector<int>, BigCount> memo_;
};

class BipartiteCounter {
 public:
  explicit BipartiteCounter(int d) : d_(d) {}

  BigCount count(int rows_left, const std::vector<int>& columns) {
    if (rows_left == 0) return columns.empty() ? 1 : 0;
    if (auto it = memo_.find(columns); it != memo_.end()) return it->second;
    BigCount total = 0;
    for_each_subset(static_cast<int>(columns.size()), d_,
                    [&](const std::vector<int>& chosen) {
                      std::vector<int> next = columns;
                      for (int idx : chosen) --next[idx];
                      next = normalized(std::move(next));
                      for (int c : next)
                        if (c > rows_left - 1) return;
                      total += count(rows_left - 1, next);
                    });
    memo_.emplace(columns, total);
    return total;
  }

 private:
  int d_;
  std::map<std::vector<int>, BigCount> memo_;
};

class RegularLister {
 public:
  RegularLister(int n, int d) : n_(n), deficit_(n, d) {}

  std::vector<LabeledGraph> run() {
    place(0);
    return std::move(out_);
  }

 private:
  bool feasible_after(int v) const {
    for (int w = v + 1; w < n_; ++w)
      if (deficit_[w] > n_ - v - 2) return false;
    return true;
  }

  void place(int v) {
    if (v == n_) {
      out_.emplace_back(n_, edges_);
      return;
    }
    const int need = deficit_[v];
    deficit_[v] = 0;
    pick(v, v + 1, need);
    deficit_[v] = need;
  }

  void pick(int v, int from, int need) {
    if (need == 0) {
      if (feasible_after(v)) place(v + 1);
      return;
    }
    for (int w = from; w <= n_ - need; ++w) {
      if (deficit_[w] == 0) continue;
      --deficit_[w];
      edges_.emplace_back(v, w);
      pick(v, w + 1, need - 1);
      edges_.pop_back();
      ++deficit_[w];
    }
  }

  int n_;
  std::vector<int> deficit_;
  std::vector<Edge> edges_;
  std::vector<LabeledGraph> out_;
};

class BipartiteLister {
 public:
  BipartiteLister(int n, int d) : n_(n), d_(d), deficit_(n, d) {}

  std::vector<LabeledGraph> run() {
    row(0);
    return std::move(out_);
  }

 private:
  void row(int u) {
    if (u == n_) {
      out_.emplace_back(2 * n_, edges_);
      return;
    }
    pick(u, 0, d_);
  }

  void pick(int u, int from, int need) {
    if (need == 0) {
      for (int c = 0; c < n_; ++c)
        if (deficit_[c] > n_ - u - 1) return;
      row(u + 1);
      return;
    }
    for (int c = from; c <= n_ - need; ++c) {
      if (deficit_[c] == 0) continue;
      --deficit_[c];
      edges_.emplace_back(u, n_ + c);
      pick(u, c + 1, need - 1);
      edges_.pop_back();
      ++deficit_[c];
    }
  }

  int n_;
  int d_;
  std::vector<int> deficit_;
  std::vector<Edge> edges_;
  std::vector<LabeledGraph> out_;
};

// Depth-first assignment of vertices 0..N-1 to clusters with spare capacity,
// cluster labels tried in increasing order.
class PartitionSearch {
 public:
  PartitionSearch(int num_vertices, int k, bool pin_first_vertex)
      : assignment_(num_vertices),
        remaining_(k, k > 0 ? num_vertices / k : 0),
        pin_first_vertex_(pin_first_vertex) {}

  // leaf(assignment) returns false to stop the search.
  template <typename Leaf>
  void run(Leaf&& leaf) {
    descend(0, leaf);
  }

 private:
  template <typename Leaf>
  bool descend(int v, Leaf& leaf) {
    if (v == static_cast<int>(assignment_.size())) return leaf(assignment_);
    const int k = static_cast<int>(remaining_.size());
    const int last = (pin_first_vertex_ && v == 0) ? 1 : k;
    for (int c = 0; c < last; ++c) {
      if (remaining_[c] == 0) continue;
      --remaining_[c];
      assignment_[v] = c;
      const bool keep_going = descend(v + 1, leaf);
      ++remaining_[c];
      if (!keep_going) return false;
    }
    return true;
  }

  std::vector<int> assignment_;
  std::vector<int> remaining_;
  bool pin_first_vertex_;
};

bool is_canonical(std::span<const int> assignment,
                  const std::vector<std::vector<int>>& group,
                  std::vector<int>& scratch) {
  scratch.resize(assignment.size());
  for (std::size_t g = 1; g < group.size(); ++g) {
    const auto& sigma = group[g];
    for (std::size_t v = 0; v < assignment.size(); ++v)
      scratch[v] = sigma[assignment[v]];
    if (std::lexicographical_compare(scratch.begin(), scratch.end(),
                                     assignment.begin(), assignment.end())) {
      return false;
    }
  }
  return true;
}

bool is_full_symmetric_group(std::size_t order, int k) {
  std::size_t k_factorial = 1;
  for (int i = 2; i <= k; ++i) k_factorial *= i;
  return order == k_factorial;
}

void check_membership_inputs(const LabeledGraph& graph,
                             const RsbmParams& params,
                             const OracleCaps& caps) {
  require_valid(params);
  if (graph.num_vertices() != params.num_vertices()) {
    std::ostringstream os;
    os << "graph has " << graph.num_vertices() << " vertices, model needs "
       << params.num_vertices();
    throw ValidationError(os.str());
  }
  const BigCount total = count_ordered_partitions(params.n, params.k());
  if (total > caps.partitions) {
    std::ostringstream os;
    os << "partition search over " << total << " partitions exceeds cap "
       << caps.partitions;
    throw CapExceeded(os.str(), total.convert_to<double>(),
                      static_cast<double>(caps.partitions));
  }
}

}  // namespace

EnumerationResult enumerate_regular(int n, int d, bool materialize,
                                    const OracleCaps& caps) {
  if (n < 0 || d < 0) throw ValidationError("n and d must be non-negative");
  check_cap(n, caps.regular_n, "regular");
  EnumerationResult result;
  if ((n * d) % 2 != 0 || (n > 0 && d > n - 1) || (n == 0 && d > 0)) {
    result.count = 0;
    return result;
  }
  RegularCounter counter;
  result.count = counter.count(normalized(std::vector<int>(n, d)));
  if (materialize) {
    result.graphs = RegularLister(n, d).run();
    std::sort(result.graphs.begin(), result.graphs.end());
  }
  return result;
}

EnumerationResult enumerate_bipartite_regular(int n, int d, bool materialize,
                                              const OracleCaps& caps) {
  if (n < 0 || d < 0) throw ValidationError("n and d must be non-negative");
  check_cap(n, caps.bipartite_n, "bipartite");
  EnumerationResult result;
  if (d > n) {
    result.count = 0;
    return result;
  }
  if (d == 0) {
    result.count = 1;
    if (materialize) result.graphs.emplace_back(2 * n, std::vector<Edge>{});
    return result;
  }
  BipartiteCounter counter(d);
  result.count = counter.count(n, std::vector<int>(n, d));
  if (materialize) {
    result.graphs = BipartiteLister(n, d).run();
    std::sort(result.graphs.begin(), result.graphs.end());
  }
  return result;
}

BigCount count_pairings(int n, int d, bool bipartite) {
  if (n < 0 || d < 0) throw ValidationError("n and d must be non-negative");
  const int half_edges = n * d;
  if (bipartite) return factorial(half_edges);
  if (half_edges % 2 != 0) {
    std::ostringstream os;
    os << "n*d=" << half_edges << " is odd, no perfect matching";
    throw ValidationError(os.str());
  }
  BigCount product = 1;
  for (int m = half_edges - 1; m > 1; m -= 2) product *= m;
  return product;
}

BigCount count_ordered_partitions(int n, int k) {
  BigCount block = factorial(n);
  BigCount denom = 1;
  for (int i = 0; i < k; ++i) denom *= block;
  return factorial(n * k) / denom;
}

std::vector<std::vector<int>> symmetry_group(const DegreeMatrix& a) {
  const int k = static_cast<int>(a.rows());
  std::vector<int> sigma(k);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<std::vector<int>> group;
  do {
    bool fixes = true;
    for (int i = 0; i < k && fixes; ++i)
      for (int j = 0; j < k && fixes; ++j)
        fixes = a(sigma[i], sigma[j]) == a(i, j);
    if (fixes) group.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return group;
}

bool matches_profile(const LabeledGraph& graph, std::span<const int> assignment,
                     const DegreeMatrix& a) {
  const int k = static_cast<int>(a.rows());
  thread_local std::vector<int> toward;
  toward.assign(k, 0);
  for (Vertex v = 0; v < graph.num_vertices(); ++v) {
    std::fill(toward.begin(), toward.end(), 0);
    for (Vertex w : graph.neighbors(v)) ++toward[assignment[w]];
    const int c = assignment[v];
    for (int j = 0; j < k; ++j)
      if (toward[j] != a(c, j)) return false;
  }
  return true;
}

MembershipResult support_membership(const LabeledGraph& graph,
                                    const RsbmParams& params,
                                    bool dedup_symmetry,
                                    const OracleCaps& caps) {
  check_membership_inputs(graph, params, caps);
  const int k = params.k();
  const auto group = symmetry_group(params.matrix);
  // With the full symmetric group acting freely, pinning vertex 0 to
  // cluster 0 visits exactly one k-th of every orbit.
  const bool pin = dedup_symmetry && is_full_symmetric_group(group.size(), k);

  MembershipResult result;
  result.dedup_symmetry = dedup_symmetry;
  result.symmetry_group_order = static_cast<int>(group.size());
  std::uint64_t found = 0;
  std::vector<int> scratch;
  PartitionSearch search(graph.num_vertices(), k, pin);
  search.run([&](const std::vector<int>& assignment) {
    ++result.examined;
    if (!matches_profile(graph, assignment, params.matrix)) return true;
    ++found;
    const bool canonical = is_canonical(assignment, group, scratch);
    if (canonical) ++result.symmetry_reduced_count;
    if (!dedup_symmetry || canonical) {
      if (result.valid.size() < caps.listed_partitions) {
        result.valid.emplace_back(assignment, k);
      } else {
        ++result.overflow;
      }
    }
    return true;
  });
  result.valid_count = pin ? found * static_cast<std::uint64_t>(k) : found;
  return result;
}

std::optional<ClusterPartition> find_valid_partition(const LabeledGraph& graph,
                                                     const RsbmParams& params,
                                                     const OracleCaps& caps) {
  check_membership_inputs(graph, params, caps);
  std::optional<ClusterPartition> hit;
  const bool pin = is_full_symmetric_group(
      symmetry_group(params.matrix).size(), params.k());
  PartitionSearch search(graph.num_vertices(), params.k(), pin);
  search.run([&](const std::vector<int>& assignment) {
    if (!matches_profile(graph, assignment, params.matrix)) return true;
    hit.emplace(assignment, params.k());
    return false;
  });
  return hit;
}

CensusReport uniqueness_census(const LabeledGraph& graph,
                               const RsbmParams& params,
                               const ClusterPartition& planted,
                               const OracleCaps& caps) {
  if (planted.num_vertices() != graph.num_vertices() ||
      planted.num_clusters() != params.k() ||
      !matches_profile(graph, planted.assignment(), params.matrix)) {
    throw ValidationError(
        "planted partition does not realize the degree matrix");
  }
  OracleCaps counting = caps;
  counting.listed_partitions = 0;
  const MembershipResult m = support_membership(graph, params, false, counting);
  CensusReport report;
  report.raw_valid = m.valid_count;
  report.raw_extra = m.valid_count - 1;
  report.reduced_valid = m.symmetry_reduced_count;
  report.reduced_extra = m.symmetry_reduced_count - 1;
  report.symmetry_group_order = m.symmetry_group_order;
  return report;
}

ChiSquareReport chi_square_uniform(std::vector<long> counts) {
  ChiSquareReport report;
  report.cells = static_cast<int>(counts.size());
  report.samples = std::accumulate(counts.begin(), counts.end(), 0L);
  report.degrees_of_freedom = std::max(report.cells - 1, 0);
  if (report.cells > 0 && report.samples > 0) {
    const double expected =
        static_cast<double>(report.samples) / report.cells;
    for (long c : counts) {
      const double diff = static_cast<double>(c) - expected;
      report.statistic += diff * diff / expected;
    }
  }
  report.p_value =
      report.degrees_of_freedom == 0
          ? 1.0
          : boost::math::gamma_q(report.degrees_of_freedom / 2.0,
                                 report.statistic / 2.0);
  report.counts = std::move(counts);
  return report;
}

ChiSquareReport empirical_uniformity_test(int n, int d, bool bipartite,
                                          long samples, RngStream& rng,
                                          long max_attempts,
                                          const OracleCaps& caps) {
  const EnumerationResult listing =
      bipartite ? enumerate_bipartite_regular(n, d, true, caps)
                : enumerate_regular(n, d, true, caps);
  std::map<LabeledGraph, std::size_t> index;
  for (std::size_t i = 0; i < listing.graphs.size(); ++i)
    index.emplace(listing.graphs[i], i);

  std::vector<long> counts(listing.graphs.size(), 0);
  long unmatched = 0;
  for (long s = 0; s < samples; ++s) {
    SimpleDraw draw = bipartite
                          ? sample_bipartite_simple(n, d, rng, max_attempts)
                          : sample_regular_simple(n, d, rng, max_attempts);
    if (auto it = index.find(draw.graph); it != index.end()) {
      ++counts[it->second];
    } else {
      ++unmatched;
    }
  }
  ChiSquareReport report = chi_square_uniform(std::move(counts));
  report.unmatched = unmatched;
  report.samples += unmatched;
  return report;
}

}  // namespace rsbm
