#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hocent/graph.hpp"
#include "hocent/tensor.hpp"

namespace hocent {

enum class MatrixKind { Adjacency, RandomWalk, PageRank };

inline const char* matrix_name(MatrixKind k) {
  switch (k) {
    case MatrixKind::Adjacency: return "adjacency";
    case MatrixKind::RandomWalk: return "random-walk";
    case MatrixKind::PageRank: return "pagerank";
  }
  return "?";
}

inline MatrixKind matrix_from_name(const std::string& name) {
  if (name == "adjacency" || name == "A") return MatrixKind::Adjacency;
  if (name == "random-walk" || name == "randomwalk" || name == "P")
    return MatrixKind::RandomWalk;
  if (name == "pagerank") return MatrixKind::PageRank;
  throw Error("unknown matrix kind '" + name +
              "' (expected adjacency, random-walk or pagerank)");
}

/// Configuration of the combined map  x -> alpha * M x + (1 - alpha) * T_p(x).
struct MapSpec {
  double alpha = 0.5;
  double p = 0.0;
  MatrixKind matrix = MatrixKind::Adjacency;
  TensorSpec tensor{};
  double teleport = 0.85;             // pagerank damping c
  std::vector<double> teleport_dist;  // pagerank v; empty means uniform

  void validate(NodeId n) const {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw Error("alpha must lie in [0, 1]");
    if (std::isnan(p)) throw Error("p must be a real number or +/-inf");
    if (matrix == MatrixKind::PageRank) {
      if (!(teleport > 0.0 && teleport < 1.0))
        throw Error("pagerank damping must lie in (0, 1)");
      if (!teleport_dist.empty()) {
        if (teleport_dist.size() != static_cast<std::size_t>(n))
          throw Error("teleportation vector length does not match node count");
        double sum = 0.0;
        for (const double v : teleport_dist) {
          if (v < 0.0) throw Error("teleportation vector must be nonnegative");
          sum += v;
        }
        if (std::abs(sum - 1.0) > 1e-9)
          throw Error("teleportation vector must sum to one");
      }
    }
  }
};

/// The combined operator with preassembled matrix and tensor parts. apply()
/// is pure; a single instance can be shared by concurrent callers.
class MapOperator {
 public:
  MapOperator(const Graph& g, const TriangleSet& ts, const MapSpec& spec)
      : g_(g), spec_(spec), tensor_op_(g, ts, spec.tensor) {
    spec_.validate(g.node_count());
    if (spec_.matrix != MatrixKind::Adjacency) {
      inv_degree_.resize(g.node_count());
      for (NodeId i = 0; i < g.node_count(); ++i) {
        const NodeId d = g.degree(i);
        inv_degree_[i] = d > 0 ? 1.0 / static_cast<double>(d) : 0.0;
        if (d == 0) dangling_.push_back(i);
      }
    }
  }

  const MapSpec& spec() const { return spec_; }
  NodeId size() const { return g_.node_count(); }

  void apply(std::span<const double> x, std::span<double> out) const {
    const NodeId n = g_.node_count();
    if (spec_.alpha < 1.0) {
      tensor_op_.apply(spec_.p, x, out);
      if (spec_.alpha != 0.0) {
        const double w = 1.0 - spec_.alpha;
        for (NodeId i = 0; i < n; ++i) out[i] *= w;
      }
    } else {
      std::fill(out.begin(), out.end(), 0.0);
    }
    if (spec_.alpha > 0.0) add_matrix_part(x, out);
  }

  std::vector<double> apply(std::span<const double> x) const {
    std::vector<double> out(g_.node_count());
    apply(x, out);
    return out;
  }

 private:
  // out += alpha * (M x)
  void add_matrix_part(std::span<const double> x, std::span<double> out) const {
    const NodeId n = g_.node_count();
    const double a = spec_.alpha;
    switch (spec_.matrix) {
      case MatrixKind::Adjacency: {
        for (NodeId i = 0; i < n; ++i) {
          double s = 0.0;
          for (const NodeId j : g_.neighbors(i)) s += x[j];
          out[i] += a * s;
        }
        break;
      }
      case MatrixKind::RandomWalk: {
        const double spill = dangling_mass(x) / static_cast<double>(n);
        for (NodeId i = 0; i < n; ++i) {
          double s = spill;
          for (const NodeId j : g_.neighbors(i)) s += x[j] * inv_degree_[j];
          out[i] += a * s;
        }
        break;
      }
      case MatrixKind::PageRank: {
        const double c = spec_.teleport;
        double total = 0.0;
        for (NodeId i = 0; i < n; ++i) total += x[i];
        const double uniform = total / static_cast<double>(n);
        const double spill = dangling_mass(x) / static_cast<double>(n);
        for (NodeId i = 0; i < n; ++i) {
          double s = spill;
          for (const NodeId j : g_.neighbors(i)) s += x[j] * inv_degree_[j];
          const double tele = spec_.teleport_dist.empty()
                                  ? (1.0 - c) * uniform
                                  : (1.0 - c) * total * spec_.teleport_dist[i];
          out[i] += a * (c * s + tele);
        }
        break;
      }
    }
  }

  double dangling_mass(std::span<const double> x) const {
    double s = 0.0;
    for (const NodeId i : dangling_) s += x[i];
    return s;
  }

  const Graph& g_;
  MapSpec spec_;
  TensorOperator tensor_op_;
  std::vector<double> inv_degree_;
  std::vector<NodeId> dangling_;
};

/// One application of the combined map to a nonnegative vector.
inline std::vector<double> apply_map(const Graph& g, const TriangleSet& ts,
                                     const MapSpec& spec, std::span<const double> x) {
  if (x.size() != static_cast<std::size_t>(g.node_count()))
    throw Error("apply_map: vector length does not match node count");
  for (const double v : x)
    if (v < 0.0) throw Error("apply_map: input vector must be nonnegative");
  return MapOperator(g, ts, spec).apply(x);
}

/// Support graph of the combined map: the edge (i, j) is present when the
/// matrix part or a tensor entry can move mass between i and j. For
/// alpha > 0 this is the input graph itself (matrix and map share their
/// sparsity pattern); for alpha = 0 only edges lying in a triangle remain.
inline Graph map_support_graph(const Graph& g, const TriangleSet& ts,
                               const MapSpec& spec) {
  if (spec.alpha > 0.0) return g;
  std::vector<std::pair<Label, Label>> edges;
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const auto row = g.neighbors(i);
    for (std::size_t s = 0; s < row.size(); ++s) {
      const NodeId j = row[s];
      if (j > i && ts.per_edge_count[g.row_offset(i) + static_cast<std::int64_t>(s)] > 0)
        edges.emplace_back(g.label(i), g.label(j));
    }
  }
  return Graph::build(edges, g.labels());
}

struct SolverOptions {
  std::optional<std::vector<double>> x0;  // default: uniform 1/n
  double tol = 1e-9;
  int max_iter = 10000;
  // Iterate the shifted map M(x) + shift * x instead of M(x). The shift
  // leaves eigenvectors, reported eigenvalue and bracket histories unchanged
  // but makes the iteration aperiodic, so the power method converges on
  // bipartite supports where the plain map cycles.
  double shift = 0.0;
};

/// Result of the nonlinear power method. The bracket histories record the
/// min/max ratios of map output to iterate, which enclose the dominant
/// eigenvalue and tighten monotonically when the support graph is strongly
/// connected.
struct SolverReport {
  std::vector<double> eigenvector;  // 1-normalized
  double eigenvalue = 0.0;
  std::vector<double> lower_history;
  std::vector<double> upper_history;
  int iterations = 0;
  bool converged = false;
  std::vector<std::string> hypothesis_warnings;
  std::int64_t support_excluded = 0;  // entries left out of the ratio bounds
};

inline constexpr double kSupportEps = 1e-300;

/// Nonlinear power method
///   y_{k+1} = alpha * M x_k + (1 - alpha) * T_p(x_k),
///   x_{k+1} = y_{k+1} / ||y_{k+1}||_1,
/// stopping when the eigenvalue bracket is tighter than tol * max(1, lower)
/// or the iterates move by less than tol in the 1-norm. Ratio bounds are
/// taken over entries above kSupportEps; excluded entries are counted and
/// reported (they arise when alpha = 0 and nodes lie in no triangle).
inline SolverReport solve(const Graph& g, const TriangleSet& ts, const MapSpec& spec,
                          const SolverOptions& options = {}) {
  const NodeId n = g.node_count();
  spec.validate(n);
  if (!(options.tol > 0.0)) throw Error("solve: tol must be positive");
  if (options.max_iter < 1) throw Error("solve: max_iter must be at least 1");
  if (!(options.shift >= 0.0) || !std::isfinite(options.shift))
    throw Error("solve: shift must be finite and nonnegative");

  std::vector<double> x;
  if (options.x0.has_value()) {
    if (options.x0->size() != static_cast<std::size_t>(n))
      throw Error("solve: x0 length does not match node count");
    for (const double v : *options.x0)
      if (!(v > 0.0)) throw Error("solve: x0 must be entrywise positive");
    x = *options.x0;
    double s = 0.0;
    for (const double v : x) s += v;
    for (double& v : x) v /= s;
  } else {
    x.assign(n, 1.0 / static_cast<double>(n));
  }

  SolverReport report;
  {
    const ComponentReport cr = components(map_support_graph(g, ts, spec));
    if (!cr.is_connected)
      report.hypothesis_warnings.push_back(
          "support graph not connected; the dominant eigenvector may not be "
          "unique and the result can depend on the starting vector");
    if (cr.is_bipartite)
      report.hypothesis_warnings.push_back(
          "support graph bipartite; the power iteration may fail to converge");
  }

  MapOperator op(g, ts, spec);
  std::vector<double> y(n);
  bool vanished = false;
  double lo_best = 0.0;
  double hi_best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < options.max_iter; ++k) {
    op.apply(x, y);
    if (options.shift > 0.0)
      for (NodeId i = 0; i < n; ++i) y[i] += options.shift * x[i];
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    std::int64_t excluded = 0;
    for (NodeId i = 0; i < n; ++i) {
      if (x[i] > kSupportEps) {
        // Ratio of the shifted map minus the shift: exactly the ratio of the
        // plain map, so the recorded bracket bounds rho(M) itself.
        const double r = y[i] / x[i] - options.shift;
        lo = std::min(lo, r);
        hi = std::max(hi, r);
      } else {
        ++excluded;
      }
    }
    // The ratio extrema are monotone in exact arithmetic; keep the best
    // bounds seen so the recorded bracket never widens under rounding. The
    // ordering guard corrects at most one ulp.
    lo_best = std::max(lo_best, lo);
    hi_best = std::min(hi_best, hi);
    if (lo_best > hi_best) lo_best = hi_best;
    report.lower_history.push_back(lo_best);
    report.upper_history.push_back(hi_best);
    report.support_excluded = excluded;
    report.iterations = k + 1;

    double total = 0.0;
    for (const double v : y) total += v;
    if (!(total > 0.0) || !std::isfinite(total)) {
      vanished = true;
      break;
    }
    double delta = 0.0;
    for (NodeId i = 0; i < n; ++i) {
      const double xi = y[i] / total;
      delta += std::abs(xi - x[i]);
      x[i] = xi;
    }
    if ((hi_best - lo_best) <= options.tol * std::max(1.0, lo_best) ||
        delta <= options.tol) {
      report.converged = true;
      break;
    }
  }

  if (vanished)
    report.hypothesis_warnings.push_back(
        "map output vanished (no triangles reachable from the iterate); "
        "no dominant eigenpair exists for this configuration");
  else if (!report.converged)
    report.hypothesis_warnings.push_back("maximum iteration count reached before "
                                         "the bracket closed");
  if (report.support_excluded > 0)
    report.hypothesis_warnings.push_back(
        std::to_string(report.support_excluded) +
        " node(s) with vanishing weight excluded from the eigenvalue bounds");

  report.eigenvector = std::move(x);
  report.eigenvalue =
      0.5 * (report.lower_history.back() + report.upper_history.back());
  return report;
}

}  // namespace hocent
