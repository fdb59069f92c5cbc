#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <thread>
#include <tuple>
#include <vector>

#include "hocent/detrand.hpp"
#include "hocent/graph.hpp"
#include "hocent/solver.hpp"
#include "hocent/triangles.hpp"

namespace hocent {

struct DiffusionOptions {
  double tol = 1e-12;
  int max_iter = 100000;
};

/// Seeded (rooted) PageRank: the limit of x <- c P x + (1 - c) e_seed with
/// P the column-stochastic random walk matrix. The limit has unit 1-norm and
/// solves (I - c P) x = (1 - c) e_seed.
inline std::vector<double> seeded_pagerank(const Graph& g, double c, NodeId seed,
                                           const DiffusionOptions& options = {}) {
  const NodeId n = g.node_count();
  if (!(c >= 0.0 && c < 1.0)) throw Error("seeded_pagerank: c must lie in [0, 1)");
  if (seed < 0 || seed >= n) throw Error("seeded_pagerank: seed out of range");
  if (g.degree(seed) == 0) throw Error("seeded_pagerank: seed node is isolated");

  std::vector<double> inv_degree(n, 0.0);
  std::vector<NodeId> dangling;
  for (NodeId i = 0; i < n; ++i) {
    const NodeId d = g.degree(i);
    if (d > 0)
      inv_degree[i] = 1.0 / static_cast<double>(d);
    else
      dangling.push_back(i);
  }

  std::vector<double> x(n, 0.0), next(n);
  x[seed] = 1.0;
  for (int k = 0; k < options.max_iter; ++k) {
    double spill = 0.0;
    for (const NodeId i : dangling) spill += x[i];
    spill /= static_cast<double>(n);
    double delta = 0.0;
    for (NodeId i = 0; i < n; ++i) {
      double s = spill;
      for (const NodeId j : g.neighbors(i)) s += x[j] * inv_degree[j];
      next[i] = c * s + (i == seed ? 1.0 - c : 0.0);
      delta += std::abs(next[i] - x[i]);
    }
    x.swap(next);
    if (delta <= options.tol) return x;
  }
  throw Error("seeded_pagerank: did not converge");
}

struct DiffusionResult {
  std::vector<double> vector;
  int iterations = 0;
  bool converged = false;
};

/// Second order seeded diffusion: the normalized iteration
///   yhat <- c * (alpha M y + (1 - alpha) T_p(y)) + (1 - c) e_seed,
///   y    <- yhat / ||yhat||_1.
/// With alpha = 1 and the random walk matrix this is exactly the rooted
/// PageRank process. Non-convergence is reported, not thrown; it indicates a
/// bipartite or otherwise degenerate support.
inline DiffusionResult nonlinear_seeded_diffusion(const Graph& g, const TriangleSet& ts,
                                                  const MapSpec& map, double c,
                                                  NodeId seed,
                                                  const DiffusionOptions& options = {}) {
  const NodeId n = g.node_count();
  if (!(c >= 0.0 && c < 1.0))
    throw Error("nonlinear_seeded_diffusion: c must lie in [0, 1)");
  if (seed < 0 || seed >= n) throw Error("nonlinear_seeded_diffusion: seed out of range");
  map.validate(n);

  MapOperator op(g, ts, map);
  DiffusionResult result;
  std::vector<double> y(n, 1.0 / static_cast<double>(n));
  std::vector<double> yhat(n);
  for (int k = 0; k < options.max_iter; ++k) {
    op.apply(y, yhat);
    double total = 0.0;
    for (NodeId i = 0; i < n; ++i) {
      yhat[i] = c * yhat[i] + (i == seed ? 1.0 - c : 0.0);
      total += yhat[i];
    }
    result.iterations = k + 1;
    if (!(total > 0.0) || !std::isfinite(total)) break;
    double delta = 0.0;
    for (NodeId i = 0; i < n; ++i) {
      const double v = yhat[i] / total;
      delta += std::abs(v - y[i]);
      y[i] = v;
    }
    if (delta <= options.tol) {
      result.converged = true;
      break;
    }
  }
  result.vector = std::move(y);
  return result;
}

enum class SimilarityMethod { SeededPageRank, SecondOrder };

/// Symmetric similarity scores on the non-edges of the graph, assembled from
/// one diffusion per node: score(i, j) = y_i(j) + y_j(i).
struct SimilarityScores {
  SimilarityMethod method = SimilarityMethod::SeededPageRank;
  std::vector<std::tuple<NodeId, NodeId, double>> scores;  // i < j, lexicographic
  int nonconverged_seeds = 0;
};

namespace detail {

/// Per-seed diffusions write to disjoint slots, so any thread partition gives
/// identical results.
inline void parallel_over_nodes(NodeId n, int threads, const auto& work) {
  int hw = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  hw = std::min<int>(hw, n);
  if (hw <= 1) {
    for (NodeId i = 0; i < n; ++i) work(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(hw);
  for (int t = 0; t < hw; ++t) {
    pool.emplace_back([&, t]() {
      for (NodeId i = t; i < n; i += hw) work(i);
    });
  }
  for (std::thread& th : pool) th.join();
}

}  // namespace detail

/// The PageRank method runs the same normalized iteration with alpha = 1 and
/// the random walk matrix, so comparing it against a second order
/// configuration that degenerates to alpha = 1 yields identical scores.
inline SimilarityScores similarity_matrix(const Graph& g, const TriangleSet& ts,
                                          const MapSpec& map, double c,
                                          SimilarityMethod method,
                                          const DiffusionOptions& options = {},
                                          int threads = 0) {
  const NodeId n = g.node_count();
  MapSpec effective = map;
  if (method == SimilarityMethod::SeededPageRank) {
    effective = MapSpec{};
    effective.alpha = 1.0;
    effective.matrix = MatrixKind::RandomWalk;
  }
  std::vector<std::vector<double>> diffusion(n);
  std::vector<char> ok(n, 1);
  detail::parallel_over_nodes(n, threads, [&](NodeId seed) {
    DiffusionResult r = nonlinear_seeded_diffusion(g, ts, effective, c, seed, options);
    ok[seed] = r.converged ? 1 : 0;
    diffusion[seed] = std::move(r.vector);
  });

  SimilarityScores out;
  out.method = method;
  for (NodeId i = 0; i < n; ++i)
    if (!ok[i]) ++out.nonconverged_seeds;
  for (NodeId i = 0; i < n; ++i) {
    auto row = g.neighbors(i);
    auto it = row.begin();
    for (NodeId j = i + 1; j < n; ++j) {
      while (it != row.end() && *it < j) ++it;
      if (it != row.end() && *it == j) continue;  // existing edge: no score
      out.scores.emplace_back(i, j, diffusion[i][j] + diffusion[j][i]);
    }
  }
  return out;
}

/// One random edge-removal trial: E1 removed, both similarity matrices built
/// on the retained graph, top-|E1| non-edges selected per method.
struct SplitTrial {
  int trial = 0;
  std::uint64_t rng_seed = 0;
  std::vector<std::pair<NodeId, NodeId>> removed_edges;
  std::vector<std::pair<NodeId, NodeId>> predicted_second_order;
  std::vector<std::pair<NodeId, NodeId>> predicted_pagerank;
  std::int64_t hits_second_order = 0;
  std::int64_t hits_pagerank = 0;
  std::int64_t total = 0;
  double ratio = 0.0;  // NaN when the PageRank method scores no hits
  bool retained_graph_connected = true;
};

namespace detail {

inline std::vector<std::pair<NodeId, NodeId>> top_pairs(
    const std::vector<std::tuple<NodeId, NodeId, double>>& scores, std::int64_t count) {
  std::vector<std::size_t> index(scores.size());
  for (std::size_t i = 0; i < index.size(); ++i) index[i] = i;
  // Highest score first; ties broken by ascending (i, j). The score list is
  // already lexicographic, so a stable sort on the score alone suffices.
  std::stable_sort(index.begin(), index.end(), [&](std::size_t a, std::size_t b) {
    return std::get<2>(scores[a]) > std::get<2>(scores[b]);
  });
  const std::size_t take = std::min<std::size_t>(count, index.size());
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(take);
  for (std::size_t i = 0; i < take; ++i)
    out.emplace_back(std::get<0>(scores[index[i]]), std::get<1>(scores[index[i]]));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::int64_t count_hits(const std::vector<std::pair<NodeId, NodeId>>& predicted,
                               const std::vector<std::pair<NodeId, NodeId>>& removed) {
  std::int64_t hits = 0;
  for (const auto& e : predicted)
    if (std::binary_search(removed.begin(), removed.end(), e)) ++hits;
  return hits;
}

}  // namespace detail

/// Edge-removal evaluation: per trial, a uniform sample of round(m/10) edges
/// is removed, both similarity matrices are computed on the retained graph,
/// and the ratio of hit counts (second order over PageRank) is recorded.
/// Fully deterministic given rng_seed.
inline std::vector<SplitTrial> run_split_experiment(const Graph& g, const MapSpec& map,
                                                    double c, std::uint64_t rng_seed,
                                                    int trials,
                                                    const DiffusionOptions& options = {},
                                                    int threads = 0) {
  if (g.edge_count() < 20)
    throw Error("run_split_experiment: graph must have at least 20 edges");
  if (trials < 1) throw Error("run_split_experiment: trials must be at least 1");

  const auto all_edges = g.edges();
  const std::int64_t remove_count =
      std::llround(static_cast<double>(g.edge_count()) / 10.0);
  rng::Engine engine(rng_seed);
  std::vector<SplitTrial> out;
  out.reserve(trials);

  for (int t = 0; t < trials; ++t) {
    SplitTrial trial;
    trial.trial = t;
    trial.rng_seed = rng_seed;
    trial.total = remove_count;

    const auto picks = rng::sample_indices(engine, all_edges.size(), remove_count);
    std::vector<char> removed(all_edges.size(), 0);
    for (const auto idx : picks) {
      removed[idx] = 1;
      trial.removed_edges.push_back(all_edges[idx]);
    }
    std::vector<std::pair<Label, Label>> retained;
    retained.reserve(all_edges.size() - picks.size());
    for (std::size_t e = 0; e < all_edges.size(); ++e)
      if (!removed[e])
        retained.emplace_back(g.label(all_edges[e].first), g.label(all_edges[e].second));
    // Same label universe, so internal ids in g0 coincide with those of g.
    const Graph g0 = Graph::build(retained, g.labels());
    trial.retained_graph_connected = components(g0).is_connected;
    const TriangleSet ts0 = enumerate_triangles(g0);

    const SimilarityScores sm =
        similarity_matrix(g0, ts0, map, c, SimilarityMethod::SecondOrder, options, threads);
    const SimilarityScores spr = similarity_matrix(
        g0, ts0, map, c, SimilarityMethod::SeededPageRank, options, threads);

    trial.predicted_second_order = detail::top_pairs(sm.scores, remove_count);
    trial.predicted_pagerank = detail::top_pairs(spr.scores, remove_count);
    trial.hits_second_order =
        detail::count_hits(trial.predicted_second_order, trial.removed_edges);
    trial.hits_pagerank = detail::count_hits(trial.predicted_pagerank, trial.removed_edges);
    trial.ratio = trial.hits_pagerank > 0
                      ? static_cast<double>(trial.hits_second_order) /
                            static_cast<double>(trial.hits_pagerank)
                      : std::numeric_limits<double>::quiet_NaN();
    out.push_back(std::move(trial));
  }
  return out;
}

/// Five-number summary plus mean of the defined ratios (type-7 quantiles).
struct RatioSummary {
  double min = 0, q1 = 0, median = 0, q3 = 0, max = 0, mean = 0;
  int defined = 0;
  int undefined = 0;
};

inline RatioSummary summarize_ratios(std::vector<double> ratios) {
  RatioSummary s;
  const int total_in = static_cast<int>(ratios.size());
  std::erase_if(ratios, [](double r) { return std::isnan(r); });
  s.defined = static_cast<int>(ratios.size());
  s.undefined = total_in - s.defined;
  if (ratios.empty()) {
    s.min = s.q1 = s.median = s.q3 = s.max = s.mean =
        std::numeric_limits<double>::quiet_NaN();
    return s;
  }
  std::sort(ratios.begin(), ratios.end());
  const auto quantile = [&](double p) {
    const double h = p * static_cast<double>(ratios.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(h);
    const std::size_t hi = std::min(lo + 1, ratios.size() - 1);
    return ratios[lo] + (h - static_cast<double>(lo)) * (ratios[hi] - ratios[lo]);
  };
  s.min = ratios.front();
  s.q1 = quantile(0.25);
  s.median = quantile(0.5);
  s.q3 = quantile(0.75);
  s.max = ratios.back();
  double total = 0.0;
  for (const double r : ratios) total += r;
  s.mean = total / static_cast<double>(ratios.size());
  return s;
}

}  // namespace hocent
