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

#include "rsbm/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <limits>
#include <numbers>
#include <sstream>
#include <thread>

#include <Eigen/Eigenvalues>

namespace rsbm {
namespace {

constexpr int kExactLimit = 64;

double log2_big(const BigCount& x) {
  const auto bits = static_cast<long>(boost::multiprecision::msb(x));
  if (bits <= 52) return std::log2(x.convert_to<double>());
  const long shift = bits - 52;
  const BigCount top = x >> shift;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

BigCount factorial(int m) {
  BigCount f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

double log2_factorial(double m) { return std::lgamma(m + 1.0) / std::numbers::ln2; }

}  // namespace

GmHmCheck gm_hm_check(const DegreeMatrix& a, double tolerance) {
  require_valid(a);
  const int k = static_cast<int>(a.rows());
  const double d = a.row(0).sum();
  GmHmCheck check;
  const double rhs = d * std::log2(d / k);
  for (int i = 0; i < k; ++i) {
    double lhs = 0.0;
    double log_product = 0.0;
    for (int j = 0; j < k; ++j) {
      const double x = a(i, j);
      lhs += x * std::log2(x);
      log_product += std::log2(x);
    }
    check.row_margins.push_back(lhs - rhs);
    check.product_sum_margins.push_back(std::log2(double(k)) + log_product -
                                        std::log2(d));
  }
  double sum = 0.0;
  for (double m : check.row_margins) sum += m;
  check.combined_margin = 0.5 * sum;
  const auto ok = [tolerance](double m) { return m >= -tolerance; };
  check.holds = std::all_of(check.row_margins.begin(), check.row_margins.end(), ok) &&
                ok(check.combined_margin) &&
                std::all_of(check.product_sum_margins.begin(),
                            check.product_sum_margins.end(), ok);
  check.equality = a.isConstant(a(0, 0));
  return check;
}

double regular_count_log2(int n, int d) {
  if (n < 1 || d < 1) throw ValidationError("n and d must be positive");
  const long nd = static_cast<long>(n) * d;
  if (nd % 2 != 0) {
    std::ostringstream os;
    os << "n*d=" << nd << " is odd";
    throw ValidationError(os.str());
  }
  if (nd <= kExactLimit) {
    const int m = static_cast<int>(nd);
    BigCount den = factorial(m / 2);
    den <<= m / 2;
    const BigCount dfact = factorial(d);
    for (int i = 0; i < n; ++i) den *= dfact;
    return log2_big(factorial(m)) - log2_big(den);
  }
  const double m = static_cast<double>(nd);
  return log2_factorial(m) - log2_factorial(m / 2) - m / 2 -
         n * log2_factorial(d);
}

double bipartite_count_log2(int n, int d) {
  if (n < 1 || d < 1) throw ValidationError("n and d must be positive");
  if (d > n) throw ValidationError("bipartite degree exceeds side size");
  const long nd = static_cast<long>(n) * d;
  if (nd <= kExactLimit) {
    BigCount den = 1;
    const BigCount dfact = factorial(d);
    for (int i = 0; i < 2 * n; ++i) den *= dfact;
    return log2_big(factorial(static_cast<int>(nd))) - log2_big(den);
  }
  return log2_factorial(static_cast<double>(nd)) - 2.0 * n * log2_factorial(d);
}

double cluster_ratio(int k) {
  return std::pow(double(k), 3) / std::pow(2 * std::numbers::pi, k - 1);
}

BoundReport support_measure_bound(const RsbmParams& params) {
  require_valid(params);
  BoundReport r;
  r.k = params.k();
  r.n = params.n;
  r.d = params.degree();
  const double k = r.k;
  const double n = r.n;
  const double d = r.d;
  const double log2_n = std::log2(n);
  const double log2_e = std::numbers::log2e;
  const double log2_2pi = std::log2(2 * std::numbers::pi);
  r.polynomial_exponent = (k * k - 3 * k + 2) / 4;

  double entry_term = 0.0;
  for (int i = 0; i < r.k; ++i)
    for (int j = 0; j < r.k; ++j) {
      const double x = params.matrix(i, j);
      entry_term += (x + 1) * n / 2 * std::log2(x);
    }
  const double knd2 = k * n * d / 2;
  r.log2_model_count = k * n * std::log2(k) + knd2 * log2_n + knd2 * log2_e +
                       r.polynomial_exponent * log2_n - entry_term -
                       n * k * k / 2 * log2_2pi;
  r.log2_regular_count = knd2 * std::log2(k * n * d) + knd2 * log2_e -
                         k * n / 2 * log2_2pi - (d + 0.5) * k * n * std::log2(d);
  r.log2_count_ratio = r.log2_model_count - r.log2_regular_count;
  r.ratio = cluster_ratio(r.k);
  r.decay_rate = k / 2 * std::log2(r.ratio);
  r.log2_support_bound = n * r.decay_rate + r.polynomial_exponent * log2_n;
  return r;
}

SpectralReport spectral_gap(const LabeledGraph& graph, int d) {
  if (graph.num_vertices() < 2) {
    throw ValidationError("spectral gap needs at least two vertices");
  }
  if (graph.regular_degree() != d) {
    std::ostringstream os;
    os << "graph is not " << d << "-regular";
    throw ValidationError(os.str());
  }
  if (!graph.is_connected()) throw ValidationError("graph is disconnected");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      adjacency_matrix<double>(graph), Eigen::EigenvaluesOnly);
  SpectralReport report;
  report.eigenvalues = solver.eigenvalues();
  const Eigen::Index m = report.eigenvalues.size();
  report.lambda_max = report.eigenvalues(m - 1);
  report.lambda2 = report.eigenvalues(m - 2);
  report.gamma = 1.0 - report.lambda2 / d;
  return report;
}

SpectralReport expansion_check(const LabeledGraph& graph, int d,
                               const ExpansionOptions& options,
                               RngStream* rng) {
  SpectralReport report = spectral_gap(graph, d);
  const int n_total = graph.num_vertices();
  const int max_size = n_total / 2;
  double worst = std::numeric_limits<double>::infinity();

  if (options.mode == ExpansionMode::kExhaustive) {
    if (n_total > options.exhaustive_cap) {
      std::ostringstream os;
      os << "exhaustive expansion check on " << n_total
         << " vertices exceeds cap " << options.exhaustive_cap;
      throw CapExceeded(os.str(), n_total, options.exhaustive_cap);
    }
    std::vector<std::uint32_t> adj(n_total, 0);
    for (const auto& [u, v] : graph.edges()) {
      adj[u] |= 1u << v;
      adj[v] |= 1u << u;
    }
    std::uint32_t best_mask = 0;
    const std::uint32_t limit = 1u << n_total;
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
      const int size = std::popcount(mask);
      if (size > max_size) continue;
      ++report.subsets_examined;
      int cut = 0;
      for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
        cut += std::popcount(adj[std::countr_zero(rest)] & ~mask);
      }
      const double ratio = static_cast<double>(cut) / (double(d) * size);
      if (ratio < worst) {
        worst = ratio;
        best_mask = mask;
      }
    }
    for (int v = 0; v < n_total; ++v)
      if (best_mask >> v & 1u) report.witness.push_back(v);
  } else {
    if (rng == nullptr) {
      throw ValidationError("sampled expansion check needs a random stream");
    }
    std::vector<Vertex> order(n_total);
    std::vector<char> inside(n_total, 0);
    for (long s = 0; s < options.samples; ++s) {
      const int size = 1 + static_cast<int>(rng->below(max_size));
      for (int i = 0; i < n_total; ++i) order[i] = i;
      for (int i = 0; i < size; ++i) {
        const int j = i + static_cast<int>(rng->below(n_total - i));
        std::swap(order[i], order[j]);
      }
      for (int i = 0; i < size; ++i) inside[order[i]] = 1;
      int cut = 0;
      for (int i = 0; i < size; ++i)
        for (Vertex w : graph.neighbors(order[i]))
          if (!inside[w]) ++cut;
      for (int i = 0; i < size; ++i) inside[order[i]] = 0;
      ++report.subsets_examined;
      const double ratio = static_cast<double>(cut) / (double(d) * size);
      if (ratio < worst) {
        worst = ratio;
        report.witness.assign(order.begin(), order.begin() + size);
        std::sort(report.witness.begin(), report.witness.end());
      }
    }
  }
  if (report.subsets_examined > 0) {
    report.worst_ratio = worst;
    report.bound_satisfied = worst >= report.gamma / 2 - options.tolerance;
  }
  return report;
}

HypothesisReport check_uniqueness_hypotheses(const DegreeMatrix& a) {
  require_valid(a);
  const int k = static_cast<int>(a.rows());
  HypothesisReport r;
  for (int i = 0; i < k; ++i) {
    int b = 0;
    for (int l = 0; l < k; ++l)
      if (l != i) b = std::max(b, a(i, l));
    r.row_max_off_diagonal.push_back(b);
    r.c_star = std::max(r.c_star, double(b) / a(i, i));
  }
  r.condition_bounded_ratio = std::isfinite(r.c_star);
  const Eigen::VectorXi diag = a.diagonal();
  r.homogeneous_diagonal = (diag.array() == diag(0)).all();

  const auto in_range = [](double m) { return m > 0.0 && m < 0.25; };
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      const double aii = a(i, i);
      const double ajj = a(j, j);
      if (aii < ajj) {
        const double m = (aii / ajj - 0.5) / 2;
        r.delta_margins.push_back({i, j, m, in_range(m)});
      } else if (aii > ajj && r.row_max_off_diagonal[j] > aii - ajj) {
        const double m = (0.5 - r.row_max_off_diagonal[j] / aii) / 2;
        r.epsilon_margins.push_back({i, j, m, in_range(m)});
      }
    }
  }
  for (int ref = 0; ref < k; ++ref) {
    for (int i = 0; i < k; ++i) {
      if (a(i, i) <= a(ref, ref)) continue;
      const double b = r.row_max_off_diagonal[ref];
      r.switch_thresholds.push_back({ref, i, b / (a(i, i) - a(ref, ref) + b)});
    }
  }
  const auto all_ok = [](const std::vector<PairMargin>& v) {
    return std::all_of(v.begin(), v.end(), [](const auto& m) { return m.ok; });
  };
  r.condition_heterogeneity = r.homogeneous_diagonal ||
                              (all_ok(r.delta_margins) && all_ok(r.epsilon_margins));
  r.pass = r.condition_bounded_ratio && r.condition_heterogeneity;
  if (a.minCoeff() < 3) {
    r.warnings.push_back(
        "entries below 3: the conclusion needs sufficiently large entries");
  }
  return r;
}

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                               double z) {
  if (trials == 0) return {0.0, 1.0};
  const double m = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / m;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / m;
  const double center = (p + z2 / (2 * m)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / m + z2 / (4 * m * m)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

namespace {

// Runs job(i) for i in [0, count) on a small worker pool; rethrows the
// exception of the lowest failing index.
template <typename Job>
void parallel_for(long count, unsigned workers, Job&& job) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<long>(workers, std::max(count, 1L)));
  std::vector<std::exception_ptr> errors(count);
  std::atomic<long> next{0};
  auto worker = [&] {
    for (long i = next++; i < count; i = next++) {
      try {
        job(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

TvReport tv_lower_bound_experiment(const RsbmParams& params, long samples,
                                   RngStream& rng, const TvOptions& options) {
  require_valid(params);
  if (samples < 0) throw ValidationError("sample count must be non-negative");
  const BigCount partitions = count_ordered_partitions(params.n, params.k());
  if (partitions > options.caps.partitions) {
    std::ostringstream os;
    os << "membership search over " << partitions
       << " partitions exceeds cap " << options.caps.partitions;
    throw CapExceeded(os.str(), partitions.convert_to<double>(),
                      static_cast<double>(options.caps.partitions));
  }
  const long rsbm_samples =
      options.rsbm_samples < 0 ? samples : options.rsbm_samples;
  const int n_total = params.num_vertices();
  const int d = params.degree();
  const RngStream base(rng.engine()());

  std::vector<char> uniform_hit(samples, 0);
  parallel_for(samples, options.workers, [&](long i) {
    RngStream stream = base.split(1, static_cast<std::uint64_t>(i));
    const SimpleDraw draw =
        sample_regular_simple(n_total, d, stream, options.max_attempts);
    uniform_hit[i] =
        find_valid_partition(draw.graph, params, options.caps).has_value();
  });
  std::vector<char> model_hit(rsbm_samples, 0);
  parallel_for(rsbm_samples, options.workers, [&](long i) {
    RngStream stream = base.split(2, static_cast<std::uint64_t>(i));
    const RsbmSample draw = sample_rsbm(params, stream, options.max_attempts);
    model_hit[i] =
        find_valid_partition(draw.graph, params, options.caps).has_value();
  });

  TvReport r;
  r.samples = samples;
  r.in_support = std::count(uniform_hit.begin(), uniform_hit.end(), 1);
  r.p_hat = samples > 0 ? double(r.in_support) / samples : 0.0;
  r.p_interval = wilson_interval(r.in_support, samples);
  r.tv_lower_bound = 1.0 - r.p_hat;
  r.tv_lower_bound_ci = 1.0 - r.p_interval.high;
  r.rsbm_samples = rsbm_samples;
  r.rsbm_in_support = std::count(model_hit.begin(), model_hit.end(), 1);
  r.rsbm_rate = rsbm_samples > 0 ? double(r.rsbm_in_support) / rsbm_samples : 0.0;
  r.rsbm_interval = wilson_interval(r.rsbm_in_support, rsbm_samples);
  r.separated = r.p_interval.high < r.rsbm_interval.low;
  return r;
}

}  // namespace rsbm
