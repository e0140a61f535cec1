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

#ifndef RSBM_SAMPLERS_HPP_
#define RSBM_SAMPLERS_HPP_

#include <compare>
#include <vector>

#include "rsbm/model.hpp"
#include "rsbm/rng.hpp"

namespace rsbm {

inline constexpr long kDefaultMaxAttempts = 10'000;

enum class Side { kLeft, kRight };

// A stub of a future edge. Half-edges are ordered owner-major, slot-minor;
// for a vertex of degree d, half-edge index = owner * d + slot.
struct HalfEdge {
  Vertex owner = 0;
  int slot = 0;
  Side side = Side::kLeft;

  static HalfEdge at(int index, int degree, Side side = Side::kLeft) {
    return {index / degree, index % degree, side};
  }
  int index(int degree) const { return owner * degree + slot; }

  friend auto operator<=>(const HalfEdge&, const HalfEdge&) = default;
};

// Partial perfect matching over a fixed set of half-edges. partner[h] is the
// half-edge matched to h, or kUnmatched.
class PairingState {
 public:
  static constexpr int kUnmatched = -1;

  explicit PairingState(int num_half_edges)
      : partner_(num_half_edges, kUnmatched) {}

  void match(int a, int b);
  bool matched(int h) const { return partner_[h] != kUnmatched; }
  int partner(int h) const { return partner_[h]; }
  int num_pairs() const { return num_pairs_; }
  int size() const { return static_cast<int>(partner_.size()); }
  bool complete() const { return 2 * num_pairs_ == size(); }

 private:
  std::vector<int> partner_;
  int num_pairs_ = 0;
};

// Exploration process on n*d half-edges: repeatedly match the smallest
// unmatched half-edge with a uniform choice among the other unmatched ones.
PairingState explore_pairing(int num_half_edges, RngStream& rng);

// Bipartite exploration: left half-edge t (in order) is matched with a
// uniform unmatched right half-edge. Returns right_of[t].
std::vector<int> explore_bipartite_pairing(int num_half_edges, RngStream& rng);

// d-regular multigraph on n vertices from the pairing process.
MultiGraph sample_regular_multigraph(int n, int d, RngStream& rng);

// d-regular bipartite multigraph; left vertices [0, n), right [n, 2n).
MultiGraph sample_bipartite_multigraph(int n, int d, RngStream& rng);

bool is_simple(const MultiGraph& graph);

struct SimpleDraw {
  LabeledGraph graph;
  long attempts = 0;
};

// Pairing process conditioned on simplicity by rejection. Uniform over the
// labeled simple d-regular graphs on n vertices. Throws RejectionFailure
// after max_attempts.
SimpleDraw sample_regular_simple(int n, int d, RngStream& rng,
                                 long max_attempts = kDefaultMaxAttempts);

// Uniform over the labeled d-regular bipartite graphs on n + n vertices.
SimpleDraw sample_bipartite_simple(int n, int d, RngStream& rng,
                                   long max_attempts = kDefaultMaxAttempts);

// Uniform ordered partition of [0, num_vertices) into k equal blocks.
ClusterPartition sample_uniform_partition(int num_vertices, int k,
                                          RngStream& rng);

struct RsbmSample {
  LabeledGraph graph;
  ClusterPartition partition;
  long attempts = 0;  // total pairing draws over all components
};

// Draws the planted partition and, independently per component, a uniform
// a_ii-regular graph inside cluster i and a uniform a_ij-bipartite-regular
// graph across clusters i < j. Each component reads its own substream.
RsbmSample sample_rsbm(const RsbmParams& params, RngStream& rng,
                       long max_attempts = kDefaultMaxAttempts);

}  // namespace rsbm

#endif  // RSBM_SAMPLERS_HPP_
