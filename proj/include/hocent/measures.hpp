#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hocent/graph.hpp"
#include "hocent/solver.hpp"
#include "hocent/tensor.hpp"
#include "hocent/triangles.hpp"

namespace hocent {

enum class Normalization { Raw, OneNorm, InfNorm };

inline const char* normalization_name(Normalization n) {
  switch (n) {
    case Normalization::Raw: return "raw";
    case Normalization::OneNorm: return "one-norm";
    case Normalization::InfNorm: return "inf-norm";
  }
  return "?";
}

/// Per-node nonnegative measure with its declared normalization. Solver-backed
/// measures carry the hypothesis warnings of the run that produced them.
struct MeasureVector {
  std::string name;
  Normalization normalization = Normalization::Raw;
  std::vector<double> values;
  std::vector<std::string> warnings;
};

inline MeasureVector renormalize(MeasureVector mv, Normalization target) {
  if (target == Normalization::Raw || mv.values.empty()) {
    mv.normalization = target == Normalization::Raw ? Normalization::Raw : mv.normalization;
    return mv;
  }
  double scale = 0.0;
  if (target == Normalization::OneNorm) {
    for (const double v : mv.values) scale += std::abs(v);
  } else {
    for (const double v : mv.values) scale = std::max(scale, std::abs(v));
  }
  if (scale > 0.0)
    for (double& v : mv.values) v /= scale;
  mv.normalization = target;
  return mv;
}

/// Watts-Strogatz clustering coefficient: the fraction of wedges centered at
/// each node that close into triangles; zero for degree < 2.
inline MeasureVector ws_clustering(const Graph& g, const TriangleSet& ts) {
  MeasureVector mv{"ws_clustering", Normalization::Raw, {}, {}};
  mv.values.resize(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const std::int64_t d = g.degree(i);
    mv.values[i] = d >= 2 ? 2.0 * static_cast<double>(ts.per_node_count[i]) /
                                static_cast<double>(d * (d - 1))
                          : 0.0;
  }
  return mv;
}

/// Graph transitivity: closed wedges over all wedges.
inline double global_clustering(const Graph& g, const TriangleSet& ts) {
  std::int64_t wedges = 0;
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const std::int64_t d = g.degree(i);
    wedges += d * (d - 1);
  }
  if (wedges == 0) throw Error("no wedges");
  return 6.0 * static_cast<double>(ts.count()) / static_cast<double>(wedges);
}

/// Local closure coefficient h_i = 2 tri(i) / w(i); zero when w(i) = 0
/// (which forces tri(i) = 0: every neighbor then has degree one).
inline MeasureVector local_closure(const Graph& g, const TriangleSet& ts) {
  MeasureVector mv{"local_closure", Normalization::Raw, {}, {}};
  mv.values.resize(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const std::int64_t w = ts.path2_count[i];
    mv.values[i] = w > 0 ? 2.0 * static_cast<double>(ts.per_node_count[i]) /
                               static_cast<double>(w)
                         : 0.0;
  }
  return mv;
}

/// Spectral (mutually reinforcing) coefficient: the dominant nonnegative
/// eigenvector of the pure tensor map T_p, 1-normalized. Zero exactly on
/// nodes that lie in no triangle.
inline MeasureVector spectral_coefficient(const Graph& g, const TriangleSet& ts,
                                          TensorSpec tensor, double p,
                                          const SolverOptions& options = {}) {
  if (ts.count() == 0) throw Error("no second-order structure");
  MapSpec spec;
  spec.alpha = 0.0;
  spec.p = p;
  spec.tensor = tensor;
  SolverReport rep = solve(g, ts, spec, options);
  MeasureVector mv;
  mv.name = std::string("spectral_coefficient_") + tensor_code(tensor.variant);
  mv.normalization = Normalization::OneNorm;
  mv.values = std::move(rep.eigenvector);
  mv.warnings = std::move(rep.hypothesis_warnings);
  return mv;
}

/// Static counterpart T_p(1), independent of p: per node, 2 tri(i) for the
/// binary tensor, the Watts-Strogatz coefficient for the clustering tensor
/// and the local closure coefficient for the closure tensor. Computed in
/// closed form so those identities hold exactly.
inline MeasureVector static_coefficient(const Graph& g, const TriangleSet& ts,
                                        TensorSpec tensor) {
  switch (tensor.variant) {
    case TensorVariant::Binary: {
      MeasureVector mv{"static_coefficient_B", Normalization::Raw, {}, {}};
      mv.values.resize(g.node_count());
      for (NodeId i = 0; i < g.node_count(); ++i)
        mv.values[i] = 2.0 * static_cast<double>(ts.per_node_count[i]);
      return mv;
    }
    case TensorVariant::Clustering: {
      MeasureVector mv = ws_clustering(g, ts);
      mv.name = "static_coefficient_C";
      return mv;
    }
    case TensorVariant::Closure: {
      MeasureVector mv = local_closure(g, ts);
      mv.name = "static_coefficient_L";
      return mv;
    }
    case TensorVariant::RandomWalk: {
      MeasureVector mv{"static_coefficient_W", Normalization::Raw, {}, {}};
      mv.values.assign(g.node_count(), 0.0);
      for (const auto& [i, j, k] : ts.triangles) {
        mv.values[i] += 2.0 / static_cast<double>(ts.per_edge_count[g.edge_slot(j, k)]);
        mv.values[j] += 2.0 / static_cast<double>(ts.per_edge_count[g.edge_slot(i, k)]);
        mv.values[k] += 2.0 / static_cast<double>(ts.per_edge_count[g.edge_slot(i, j)]);
      }
      return mv;
    }
  }
  throw Error("unknown tensor variant");
}

enum class CentralityKind { Degree, Eigenvector, PageRank };

/// First order centralities: degree (raw counts), eigenvector centrality
/// (dominant eigenvector of the adjacency matrix) and PageRank.
inline MeasureVector first_order_centrality(const Graph& g, CentralityKind kind,
                                            double pagerank_c = 0.85,
                                            std::vector<double> pagerank_v = {},
                                            const SolverOptions& options = {}) {
  if (kind == CentralityKind::Degree) {
    MeasureVector mv{"degree", Normalization::Raw, {}, {}};
    mv.values.resize(g.node_count());
    for (NodeId i = 0; i < g.node_count(); ++i)
      mv.values[i] = static_cast<double>(g.degree(i));
    return mv;
  }
  MapSpec spec;
  spec.alpha = 1.0;
  spec.matrix = kind == CentralityKind::Eigenvector ? MatrixKind::Adjacency
                                                    : MatrixKind::PageRank;
  spec.teleport = pagerank_c;
  spec.teleport_dist = std::move(pagerank_v);
  TriangleSet empty;
  empty.per_node_count.assign(g.node_count(), 0);
  empty.per_edge_count.assign(g.slot_count(), 0);
  empty.wedge_count.assign(g.node_count(), 0);
  empty.path2_count.assign(g.node_count(), 0);
  SolverOptions effective = options;
  // The adjacency power iteration cycles on bipartite graphs; a unit shift
  // keeps the eigenpair and restores convergence. The PageRank map has a
  // positive diagonal already.
  if (kind == CentralityKind::Eigenvector) effective.shift = 1.0;
  SolverReport rep = solve(g, empty, spec, effective);
  MeasureVector mv;
  mv.name = kind == CentralityKind::Eigenvector ? "eigenvector" : "pagerank";
  mv.normalization = Normalization::OneNorm;
  mv.values = std::move(rep.eigenvector);
  mv.warnings = std::move(rep.hypothesis_warnings);
  return mv;
}

/// One summary row per dataset. Spectral averages use p = 0 and are reported
/// under the largest-entry-equals-one convention; the companion value rescales
/// the 1-normalized vector by n, whose mean is 1 by construction and is kept
/// only to make the normalization dependence visible.
struct DatasetSummary {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t triangle_count = 0;
  std::optional<double> global_cc;
  double average_cc = 0.0;
  std::optional<double> avg_spectral_cc_inf;
  double average_closure = 0.0;
  std::optional<double> avg_spectral_closure_inf;
  std::optional<double> avg_spectral_cc_one_scaled;
  std::optional<double> avg_spectral_closure_one_scaled;
  std::vector<std::string> warnings;
};

inline double mean(const std::vector<double>& v) {
  double s = 0.0;
  for (const double x : v) s += x;
  return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

inline DatasetSummary summarize(const Graph& g, const TriangleSet& ts,
                                const SolverOptions& options = {}) {
  DatasetSummary s;
  s.n = g.node_count();
  s.m = g.edge_count();
  s.triangle_count = ts.count();
  try {
    s.global_cc = global_clustering(g, ts);
  } catch (const Error&) {
    s.warnings.push_back("no wedges; transitivity undefined");
  }
  s.average_cc = mean(ws_clustering(g, ts).values);
  s.average_closure = mean(local_closure(g, ts).values);
  if (ts.count() > 0) {
    for (const TensorVariant variant :
         {TensorVariant::Clustering, TensorVariant::Closure}) {
      MeasureVector mv = spectral_coefficient(g, ts, {variant}, 0.0, options);
      for (const std::string& w : mv.warnings)
        s.warnings.push_back(std::string(1, tensor_code(variant)) + ": " + w);
      // mv is 1-normalized; the scaled-by-n mean is 1 up to rounding and is
      // emitted alongside the largest-entry convention.
      std::vector<double> scaled = mv.values;
      for (double& v : scaled) v *= static_cast<double>(g.node_count());
      const double one_mean = mean(scaled);
      const double inf_mean = mean(renormalize(std::move(mv), Normalization::InfNorm).values);
      if (variant == TensorVariant::Clustering) {
        s.avg_spectral_cc_inf = inf_mean;
        s.avg_spectral_cc_one_scaled = one_mean;
      } else {
        s.avg_spectral_closure_inf = inf_mean;
        s.avg_spectral_closure_one_scaled = one_mean;
      }
    }
  } else {
    s.warnings.push_back("no triangles; spectral coefficients undefined");
  }
  return s;
}

/// Mean measure value per base-2 degree bin: bin b holds nodes with degree in
/// [2^b, 2^(b+1)). Returns (bin lower edge, mean degree, mean value, count).
struct DegreeBin {
  std::int64_t lower = 0;
  double mean_degree = 0.0;
  double mean_value = 0.0;
  std::int64_t count = 0;
};

inline std::vector<DegreeBin> degree_binned_means(const Graph& g,
                                                  const std::vector<double>& values) {
  if (values.size() != static_cast<std::size_t>(g.node_count()))
    throw Error("degree_binned_means: length mismatch");
  std::vector<DegreeBin> bins;
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const std::int64_t d = g.degree(i);
    if (d == 0) continue;
    std::size_t b = 0;
    while ((std::int64_t(1) << (b + 1)) <= d) ++b;
    if (bins.size() <= b) bins.resize(b + 1);
    bins[b].lower = std::int64_t(1) << b;
    bins[b].mean_degree += static_cast<double>(d);
    bins[b].mean_value += values[i];
    ++bins[b].count;
  }
  for (DegreeBin& bin : bins) {
    if (bin.count > 0) {
      bin.mean_degree /= static_cast<double>(bin.count);
      bin.mean_value /= static_cast<double>(bin.count);
    }
  }
  std::erase_if(bins, [](const DegreeBin& b) { return b.count == 0; });
  return bins;
}

}  // namespace hocent
