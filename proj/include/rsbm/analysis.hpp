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

#ifndef RSBM_ANALYSIS_HPP_
#define RSBM_ANALYSIS_HPP_

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "rsbm/errors.hpp"
#include "rsbm/model.hpp"
#include "rsbm/oracles.hpp"
#include "rsbm/rng.hpp"
#include "rsbm/samplers.hpp"

namespace rsbm {

// Binary Shannon entropy in bits, -a log2 a - (1 - a) log2 (1 - a).
template <typename Scalar>
Scalar entropy(Scalar alpha) {
  if (!(alpha > Scalar(0) && alpha < Scalar(1))) {
    throw ValidationError("entropy argument must lie in (0, 1)");
  }
  using std::log2;
  return -alpha * log2(alpha) - (Scalar(1) - alpha) * log2(Scalar(1) - alpha);
}

// Weighted GM-HM consequences for a degree matrix, in log2 space.
//   row_margins[i]          = sum_j a_ij log2 a_ij - d log2(d / k)
//   combined_margin         = 1/2 sum_i row_margins[i]  (per unit of n)
//   product_sum_margins[i]  = log2(k prod_j a_ij) - log2(d)
// Every margin is >= 0 for a valid matrix; the row and combined margins
// vanish exactly when all entries are equal.
struct GmHmCheck {
  std::vector<double> row_margins;
  double combined_margin = 0.0;
  std::vector<double> product_sum_margins;
  bool holds = false;     // all margins >= -tolerance
  bool equality = false;  // every entry equals d / k
};

GmHmCheck gm_hm_check(const DegreeMatrix& matrix, double tolerance = 1e-9);

// log2 of (nd)! / ((nd/2)! 2^(nd/2) (d!)^n), the leading-order count of
// labeled d-regular graphs on n vertices. Exact rational arithmetic when
// n*d <= 64, log-gamma otherwise. Throws ValidationError if n*d is odd.
double regular_count_log2(int n, int d);

// log2 of (dn)! / (d!)^(2n), the leading-order count of labeled
// d-bipartite-regular graphs on n + n vertices.
double bipartite_count_log2(int n, int d);

// k^3 / (2 pi)^(k - 1).
double cluster_ratio(int k);

struct BoundReport {
  int k = 0;
  int n = 0;
  int d = 0;
  double log2_model_count = 0.0;    // leading-order number of realizations
  double log2_regular_count = 0.0;  // leading-order d-regular count on kn
  double log2_count_ratio = 0.0;    // model count over regular count
  double log2_support_bound = 0.0;  // ratio^(kn/2) * n^poly
  double ratio = 0.0;               // k^3 / (2 pi)^(k - 1)
  double decay_rate = 0.0;          // (k / 2) log2 ratio, per unit of n
  double polynomial_exponent = 0.0; // (k^2 - 3k + 2) / 4
};

// Leading-order evaluation of the uniform measure of the model's support.
// Constants hidden in the Theta notation are not included.
BoundReport support_measure_bound(const RsbmParams& params);

struct SpectralReport {
  Eigen::VectorXd eigenvalues;  // ascending
  double lambda_max = 0.0;
  double lambda2 = 0.0;         // second largest, signed
  double gamma = 0.0;           // 1 - lambda2 / d
  // Filled by expansion_check.
  std::optional<double> worst_ratio;  // min deg(S, S^c) / (d |S|)
  std::vector<Vertex> witness;
  std::uint64_t subsets_examined = 0;
  bool bound_satisfied = false;  // worst_ratio >= gamma / 2 - 1e-9
};

// Dense symmetric eigensolve of the adjacency matrix. Throws
// ValidationError unless the graph is connected and d-regular.
SpectralReport spectral_gap(const LabeledGraph& graph, int d);

enum class ExpansionMode { kExhaustive, kSampled };

struct ExpansionOptions {
  ExpansionMode mode = ExpansionMode::kExhaustive;
  int exhaustive_cap = 20;  // max vertex count for exhaustive mode
  long samples = 10'000;    // subsets drawn in sampled mode
  double tolerance = 1e-9;
};

// Minimum of deg(S, S^c) / (d |S|) over subsets with 1 <= |S| <= N/2,
// compared against gamma / 2. Sampled mode needs rng.
SpectralReport expansion_check(const LabeledGraph& graph, int d,
                               const ExpansionOptions& options = {},
                               RngStream* rng = nullptr);

struct PairMargin {
  int i = 0;
  int j = 0;
  double margin = 0.0;
  bool ok = false;  // margin in (0, 1/4)
};

struct SwitchThreshold {
  int reference = 0;  // cluster playing the role of the candidate's label
  int i = 0;          // cluster with the larger intra degree
  double threshold = 0.0;
};

// Structural hypotheses for asymptotic cluster uniqueness.
//   B_i            max off-diagonal entry of row i
//   c_star         max_i B_i / a_ii; any C > c_star satisfies C a_ii > B_i
//   delta margins  (a_ii / a_jj - 1/2) / 2 for a_ii < a_jj
//   epsilon        (1/2 - B_j / a_ii) / 2 for a_ii > a_jj, B_j > a_ii - a_jj
//   thresholds     B_r / (a_ii - a_rr + B_r) for a_ii > a_rr
struct HypothesisReport {
  std::vector<int> row_max_off_diagonal;
  double c_star = 0.0;
  bool homogeneous_diagonal = false;
  std::vector<PairMargin> delta_margins;
  std::vector<PairMargin> epsilon_margins;
  std::vector<SwitchThreshold> switch_thresholds;
  bool condition_bounded_ratio = false;
  bool condition_heterogeneity = false;
  bool pass = false;
  std::vector<std::string> warnings;
};

HypothesisReport check_uniqueness_hypotheses(const DegreeMatrix& matrix);

struct WilsonInterval {
  double low = 0.0;
  double high = 1.0;
};

// Wilson score interval; z defaults to the two-sided 95% quantile.
WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                               double z = 1.959963984540054);

struct TvOptions {
  long rsbm_samples = -1;  // defaults to the uniform-side sample count
  long max_attempts = kDefaultMaxAttempts;
  OracleCaps caps;
  unsigned workers = 0;  // 0 picks hardware concurrency
};

struct TvReport {
  long samples = 0;
  long in_support = 0;
  double p_hat = 0.0;
  WilsonInterval p_interval;
  double tv_lower_bound = 0.0;     // 1 - p_hat
  double tv_lower_bound_ci = 0.0;  // 1 - p_interval.high
  long rsbm_samples = 0;
  long rsbm_in_support = 0;
  double rsbm_rate = 0.0;
  WilsonInterval rsbm_interval;
  // Uniform-side upper bound below the model-side lower bound.
  bool separated = false;
};

// Monte Carlo estimate of how much uniform d-regular mass on kn vertices
// falls in the model's support. Instance i uses substreams keyed by i, and
// results are reduced in index order, so the report does not depend on the
// worker count.
TvReport tv_lower_bound_experiment(const RsbmParams& params, long samples,
                                   RngStream& rng,
                                   const TvOptions& options = {});

}  // namespace rsbm

#endif  // RSBM_ANALYSIS_HPP_
