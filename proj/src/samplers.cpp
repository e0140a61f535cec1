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

#include "rsbm/samplers.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>

#include "rsbm/errors.hpp"

namespace rsbm {
namespace {

// Unmatched half-edges in a compact array with O(1) removal.
class LivePool {
 public:
  explicit LivePool(int size) : items_(size), position_(size) {
    std::iota(items_.begin(), items_.end(), 0);
    std::iota(position_.begin(), position_.end(), 0);
  }

  int size() const { return static_cast<int>(items_.size()); }
  int at(int i) const { return items_[i]; }

  void remove(int item) {
    const int i = position_[item];
    const int last = items_.back();
    items_[i] = last;
    position_[last] = i;
    items_.pop_back();
  }

 private:
  std::vector<int> items_;
  std::vector<int> position_;
};

void check_sizes(int n, int d, const char* what) {
  if (n < 1 || d < 1) {
    std::ostringstream os;
    os << what << ": need n >= 1 and d >= 1, got n=" << n << " d=" << d;
    throw ValidationError(os.str());
  }
}

LabeledGraph to_simple(const MultiGraph& g) {
  return LabeledGraph(g.num_vertices(),
                      std::vector<Edge>(g.edges().begin(), g.edges().end()));
}

// Copies `local` onto the listed global vertex ids.
void embed(const LabeledGraph& local, const std::vector<Vertex>& ids,
           std::vector<Edge>& out) {
  for (const auto& [u, v] : local.edges()) out.emplace_back(ids[u], ids[v]);
}

}  // namespace

void PairingState::match(int a, int b) {
  partner_[a] = b;
  partner_[b] = a;
  ++num_pairs_;
}

PairingState explore_pairing(int num_half_edges, RngStream& rng) {
  if (num_half_edges % 2 != 0) {
    throw ValidationError("odd number of half-edges cannot be paired");
  }
  PairingState state(num_half_edges);
  LivePool live(num_half_edges);
  int smallest = 0;
  while (live.size() > 0) {
    while (state.matched(smallest)) ++smallest;
    live.remove(smallest);
    const int other = live.at(static_cast<int>(rng.below(live.size())));
    live.remove(other);
    state.match(smallest, other);
  }
  return state;
}

std::vector<int> explore_bipartite_pairing(int num_half_edges, RngStream& rng) {
  std::vector<int> right_of(num_half_edges);
  LivePool live(num_half_edges);
  for (int t = 0; t < num_half_edges; ++t) {
    const int r = live.at(static_cast<int>(rng.below(live.size())));
    live.remove(r);
    right_of[t] = r;
  }
  return right_of;
}

MultiGraph sample_regular_multigraph(int n, int d, RngStream& rng) {
  check_sizes(n, d, "regular pairing");
  if ((static_cast<long>(n) * d) % 2 != 0) {
    std::ostringstream os;
    os << "n*d=" << n * d << " is odd";
    throw ValidationError(os.str());
  }
  const PairingState pairing = explore_pairing(n * d, rng);
  MultiGraph g(n);
  for (int h = 0; h < pairing.size(); ++h) {
    const int p = pairing.partner(h);
    if (h < p) g.add_edge(h / d, p / d);
  }
  return g;
}

MultiGraph sample_bipartite_multigraph(int n, int d, RngStream& rng) {
  check_sizes(n, d, "bipartite pairing");
  const std::vector<int> right_of = explore_bipartite_pairing(n * d, rng);
  MultiGraph g(2 * n);
  for (int t = 0; t < n * d; ++t) g.add_edge(t / d, n + right_of[t] / d);
  return g;
}

bool is_simple(const MultiGraph& graph) {
  std::vector<Edge> edges(graph.edges().begin(), graph.edges().end());
  for (const auto& [u, v] : edges) {
    if (u == v) return false;
  }
  std::sort(edges.begin(), edges.end());
  return std::adjacent_find(edges.begin(), edges.end()) == edges.end();
}

SimpleDraw sample_regular_simple(int n, int d, RngStream& rng,
                                 long max_attempts) {
  check_sizes(n, d, "regular sampler");
  if (d > n - 1) {
    std::ostringstream os;
    os << "no simple " << d << "-regular graph on " << n << " vertices";
    throw ValidationError(os.str());
  }
  for (long attempt = 1; attempt <= max_attempts; ++attempt) {
    MultiGraph g = sample_regular_multigraph(n, d, rng);
    if (is_simple(g)) return {to_simple(g), attempt};
  }
  std::ostringstream os;
  os << "no simple " << d << "-regular graph on " << n << " vertices after "
     << max_attempts << " attempts";
  throw RejectionFailure(os.str(), max_attempts);
}

SimpleDraw sample_bipartite_simple(int n, int d, RngStream& rng,
                                   long max_attempts) {
  check_sizes(n, d, "bipartite sampler");
  if (d > n) {
    std::ostringstream os;
    os << "no simple " << d << "-bipartite-regular graph on " << n << "+" << n
       << " vertices";
    throw ValidationError(os.str());
  }
  for (long attempt = 1; attempt <= max_attempts; ++attempt) {
    MultiGraph g = sample_bipartite_multigraph(n, d, rng);
    if (is_simple(g)) return {to_simple(g), attempt};
  }
  std::ostringstream os;
  os << "no simple " << d << "-bipartite-regular graph on " << n << "+" << n
     << " vertices after " << max_attempts << " attempts";
  throw RejectionFailure(os.str(), max_attempts);
}

ClusterPartition sample_uniform_partition(int num_vertices, int k,
                                          RngStream& rng) {
  if (k <= 0 || num_vertices < 0 || num_vertices % k != 0) {
    std::ostringstream os;
    os << num_vertices << " vertices cannot be split into " << k
       << " equal clusters";
    throw ValidationError(os.str());
  }
  std::vector<Vertex> order(num_vertices);
  std::iota(order.begin(), order.end(), 0);
  // Fisher-Yates with the stream's own bounded draws.
  for (int i = num_vertices - 1; i > 0; --i) {
    std::swap(order[i], order[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  }
  const int block = num_vertices / k;
  std::vector<int> assignment(num_vertices);
  for (int pos = 0; pos < num_vertices; ++pos) {
    assignment[order[pos]] = pos / block;
  }
  return ClusterPartition(std::move(assignment), k);
}

RsbmSample sample_rsbm(const RsbmParams& params, RngStream& rng,
                       long max_attempts) {
  require_valid(params);
  const int k = params.k();
  const int n = params.n;
  RngStream base(rng.engine()());

  RngStream partition_stream = base.split(0);
  ClusterPartition partition =
      sample_uniform_partition(params.num_vertices(), k, partition_stream);
  const auto blocks = partition.blocks();

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(params.num_vertices()) *
                params.degree() / 2);
  long attempts = 0;
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      RngStream stream = base.split(i + 1, j + 1);
      const int a = params.matrix(i, j);
      if (i == j) {
        SimpleDraw draw = sample_regular_simple(n, a, stream, max_attempts);
        attempts += draw.attempts;
        embed(draw.graph, blocks[i], edges);
      } else {
        SimpleDraw draw = sample_bipartite_simple(n, a, stream, max_attempts);
        attempts += draw.attempts;
        std::vector<Vertex> ids = blocks[i];
        ids.insert(ids.end(), blocks[j].begin(), blocks[j].end());
        embed(draw.graph, ids, edges);
      }
    }
  }
  return {LabeledGraph(params.num_vertices(), std::move(edges)),
          std::move(partition), attempts};
}

}  // namespace rsbm
