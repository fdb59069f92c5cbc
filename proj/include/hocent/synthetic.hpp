#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "hocent/graph.hpp"
#include "hocent/solver.hpp"
#include "hocent/triangles.hpp"

namespace hocent {

/// Wheel-with-leaves family: a hub joined to an m-cycle whose nodes each
/// carry k pendant leaves. Node 1 is the hub, nodes 2..m+1 the cycle, the
/// remaining m*k nodes the leaves.
struct WheelParams {
  int m = 3;
  int k = 0;
};

inline Graph generate_wheel(const WheelParams& params) {
  if (params.m < 3) throw Error("generate_wheel: cycle length m must be at least 3");
  if (params.k < 0) throw Error("generate_wheel: leaf count k must be nonnegative");
  const std::int64_t m = params.m, k = params.k;
  std::vector<std::pair<Label, Label>> edges;
  edges.reserve(2 * m + m * k);
  for (std::int64_t i = 1; i <= m; ++i) edges.emplace_back(1, 1 + i);
  for (std::int64_t i = 1; i <= m; ++i)
    edges.emplace_back(1 + i, 1 + (i % m) + 1);
  Label next = m + 2;
  for (std::int64_t i = 1; i <= m; ++i)
    for (std::int64_t leaf = 0; leaf < k; ++leaf) edges.emplace_back(1 + i, next++);
  return Graph::build(edges);
}

enum class Crossover { HubWins, CycleWins, Boundary };

/// Positive root of  lambda^2 - b*lambda - q = 0  (b, q >= 0).
inline double wheel_quadratic_root(double b, double q) {
  return 0.5 * (b + std::sqrt(b * b + 4.0 * q));
}

namespace detail {

struct WheelForms {
  double lhs = 0;     // hub-vs-cycle comparison value (C/L forms)
  double lambda = 0;  // analytic eigenvalue where available
};

inline WheelForms wheel_forms(const WheelParams& params, double alpha,
                              TensorVariant tensor) {
  const double m = params.m, k = params.k;
  WheelForms f;
  double c1 = 0, c2 = 0;
  if (tensor == TensorVariant::Clustering) {
    c1 = 2.0 * (1.0 - alpha) / ((k + 3.0) * (k + 2.0));
    c2 = 2.0 * (1.0 - alpha) / (m - 1.0);
  } else {  // Closure
    c1 = 2.0 * (1.0 - alpha) / (m + 2.0 * k + 3.0);
    c2 = 2.0 * (1.0 - alpha) / (k + 2.0);
  }
  f.lhs = alpha * m + c2;
  f.lambda = wheel_quadratic_root(2.0 * alpha + c1,
                                  (alpha + c1) * (alpha * m + c2) + k * alpha * alpha);
  return f;
}

}  // namespace detail

/// Closed-form prediction of whether the hub outranks the cycle nodes in the
/// converged eigenvector, for p = 1. alpha = 1 reduces to the adjacency
/// eigenvector condition k < m(m-3); alpha in (0, 1) uses the per-tensor
/// reduced systems, which require m >= 4 (an m = 3 cycle adds a triangle the
/// reduction does not model). Equality cases return Boundary.
inline Crossover analytic_crossover(const WheelParams& params, double alpha,
                                    TensorVariant tensor, double p = 1.0) {
  if (params.m < 3) throw Error("analytic_crossover: m must be at least 3");
  if (params.k < 0) throw Error("analytic_crossover: k must be nonnegative");
  if (p != 1.0) throw Error("analytic_crossover: closed forms require p = 1");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw Error("analytic_crossover: alpha must lie in (0, 1]");

  if (alpha == 1.0) {
    const std::int64_t lhs = params.k;
    const std::int64_t rhs = static_cast<std::int64_t>(params.m) * (params.m - 3);
    if (lhs == rhs) return Crossover::Boundary;
    return lhs < rhs ? Crossover::HubWins : Crossover::CycleWins;
  }
  if (tensor == TensorVariant::RandomWalk)
    throw Error("analytic_crossover: no closed form for the random walk tensor");
  if (params.m < 4)
    throw Error("analytic_crossover: tensor closed forms require m >= 4");

  if (tensor == TensorVariant::Binary) {
    const double m = params.m;
    const double threshold =
        (2.0 - alpha) / (alpha * alpha) * ((2.0 - alpha) * m * m + (alpha - 4.0) * m);
    const double diff = static_cast<double>(params.k) - threshold;
    if (std::abs(diff) <= 1e-12 * std::max(1.0, std::abs(threshold)))
      return Crossover::Boundary;
    return diff < 0 ? Crossover::HubWins : Crossover::CycleWins;
  }
  const auto f = detail::wheel_forms(params, alpha, tensor);
  const double diff = f.lhs - f.lambda;
  if (std::abs(diff) <= 1e-12 * std::max(1.0, f.lambda)) return Crossover::Boundary;
  return diff > 0 ? Crossover::HubWins : Crossover::CycleWins;
}

/// Analytic eigenvalue where a closed form exists: 1 + sqrt(1 + m + k) at
/// alpha = 1, the quadratic root for the clustering/closure tensors at
/// alpha < 1 (m >= 4), nothing otherwise.
inline std::optional<double> wheel_analytic_lambda(const WheelParams& params,
                                                   double alpha, TensorVariant tensor) {
  if (alpha == 1.0)
    return 1.0 + std::sqrt(1.0 + static_cast<double>(params.m) +
                           static_cast<double>(params.k));
  if ((tensor == TensorVariant::Clustering || tensor == TensorVariant::Closure) &&
      params.m >= 4 && alpha > 0.0)
    return detail::wheel_forms(params, alpha, tensor).lambda;
  return std::nullopt;
}

/// One phase-diagram cell. Predicates are 1 (hub wins), 0 (cycle wins) or
/// -1 when indeterminate: analytic equality, no applicable closed form, or a
/// numeric gap below 100 * tol.
struct PhaseCell {
  int m = 0;
  int k = 0;
  double alpha = 0;
  TensorVariant tensor = TensorVariant::Binary;
  int numeric_hub_gt_cycle = -1;
  int analytic_hub_gt_cycle = -1;
  double lambda = 0;  // solver estimate
  double lambda_analytic = std::numeric_limits<double>::quiet_NaN();
  bool solver_converged = false;
};

/// Runs the solver on every (m, k) cell of the grid and records the numeric
/// sign of hub minus cycle centrality next to the closed-form prediction.
/// Cells are emitted in row-major (m, k) order.
inline std::vector<PhaseCell> sweep_phase_diagram(int m_lo, int m_hi, int k_lo, int k_hi,
                                                  double alpha, TensorSpec tensor,
                                                  double p = 1.0,
                                                  const SolverOptions& options = {}) {
  if (m_lo < 3 || m_hi < m_lo || k_lo < 0 || k_hi < k_lo)
    throw Error("sweep_phase_diagram: invalid m/k ranges");
  std::vector<PhaseCell> cells;
  for (int m = m_lo; m <= m_hi; ++m) {
    for (int k = k_lo; k <= k_hi; ++k) {
      PhaseCell cell;
      cell.m = m;
      cell.k = k;
      cell.alpha = alpha;
      cell.tensor = tensor.variant;

      const WheelParams params{m, k};
      const Graph g = generate_wheel(params);
      const TriangleSet ts = enumerate_triangles(g);
      MapSpec spec;
      spec.alpha = alpha;
      spec.p = p;
      spec.matrix = MatrixKind::Adjacency;
      spec.tensor = tensor;
      const SolverReport rep = solve(g, ts, spec, options);
      cell.lambda = rep.eigenvalue;
      cell.solver_converged = rep.converged;
      const double hub = rep.eigenvector[0];
      const double cycle = rep.eigenvector[1];
      if (std::abs(hub - cycle) >= 100.0 * options.tol)
        cell.numeric_hub_gt_cycle = hub > cycle ? 1 : 0;

      try {
        switch (analytic_crossover(params, alpha, tensor.variant, p)) {
          case Crossover::HubWins: cell.analytic_hub_gt_cycle = 1; break;
          case Crossover::CycleWins: cell.analytic_hub_gt_cycle = 0; break;
          case Crossover::Boundary: cell.analytic_hub_gt_cycle = -1; break;
        }
      } catch (const Error&) {
        cell.analytic_hub_gt_cycle = -1;
      }
      if (const auto lam = wheel_analytic_lambda(params, alpha, tensor.variant))
        cell.lambda_analytic = *lam;
      cells.push_back(cell);
    }
  }
  return cells;
}

}  // namespace hocent
