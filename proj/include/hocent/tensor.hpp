#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hocent/graph.hpp"
#include "hocent/power_mean.hpp"
#include "hocent/triangles.hpp"

namespace hocent {

/// The four triangle-tensor weight rules. An ordered entry (i, j, k) with
/// {i, j, k} a triangle carries weight
///   Binary:      1
///   RandomWalk:  1 / (#triangles on edge (j, k))
///   Clustering:  1 / (d_i (d_i - 1))
///   Closure:     1 / w(i), with w(i) the length-two paths starting at i.
/// All other entries are zero. The tensor is never materialized; the
/// triangle list plus the weight rule is the only representation.
enum class TensorVariant { Binary, RandomWalk, Clustering, Closure };

struct TensorSpec {
  TensorVariant variant = TensorVariant::Binary;
};

inline char tensor_code(TensorVariant v) {
  switch (v) {
    case TensorVariant::Binary: return 'B';
    case TensorVariant::RandomWalk: return 'W';
    case TensorVariant::Clustering: return 'C';
    case TensorVariant::Closure: return 'L';
  }
  return '?';
}

inline TensorVariant tensor_from_code(const std::string& code) {
  if (code == "B" || code == "b") return TensorVariant::Binary;
  if (code == "W" || code == "w") return TensorVariant::RandomWalk;
  if (code == "C" || code == "c") return TensorVariant::Clustering;
  if (code == "L" || code == "l") return TensorVariant::Closure;
  throw Error("unknown tensor variant '" + code + "' (expected B, W, C or L)");
}

/// Realized weight rule for one (graph, triangle set, variant) combination.
/// Each unordered triangle contributes, at every corner c with opposite pair
/// (u, v), the two ordered entries (c,u,v) and (c,v,u); both carry the same
/// weight, hence the factor 2 in apply().
class TensorOperator {
 public:
  TensorOperator(const Graph& g, const TriangleSet& ts, TensorSpec spec)
      : n_(g.node_count()), spec_(spec) {
    terms_.reserve(3 * ts.triangles.size());
    for (const auto& [i, j, k] : ts.triangles) {
      emit(g, ts, i, j, k);
      emit(g, ts, j, i, k);
      emit(g, ts, k, i, j);
    }
  }

  NodeId size() const { return n_; }
  TensorSpec spec() const { return spec_; }

  /// out = T_p(x). Accumulation order is the fixed triangle order, so the
  /// result is deterministic.
  void apply(double p, std::span<const double> x, std::span<double> out) const {
    assert(x.size() == static_cast<std::size_t>(n_));
    assert(out.size() == static_cast<std::size_t>(n_));
    std::fill(out.begin(), out.end(), 0.0);
    for (const CornerTerm& t : terms_) {
      out[t.corner] += 2.0 * t.weight * power_mean(x[t.left], x[t.right], p);
    }
  }

 private:
  struct CornerTerm {
    NodeId corner, left, right;
    double weight;
  };

  void emit(const Graph& g, const TriangleSet& ts, NodeId c, NodeId u, NodeId v) {
    double w = 1.0;
    switch (spec_.variant) {
      case TensorVariant::Binary:
        break;
      case TensorVariant::RandomWalk: {
        const std::int64_t t = ts.per_edge_count[g.edge_slot(u, v)];
        assert(t >= 1);
        w = 1.0 / static_cast<double>(t);
        break;
      }
      case TensorVariant::Clustering: {
        const std::int64_t d = g.degree(c);
        assert(d >= 2);  // a triangle corner has at least two neighbors
        w = 1.0 / static_cast<double>(d * (d - 1));
        break;
      }
      case TensorVariant::Closure: {
        const std::int64_t wp = ts.path2_count[c];
        assert(wp >= 2);  // both other corners contribute a 2-path
        w = 1.0 / static_cast<double>(wp);
        break;
      }
    }
    terms_.push_back({c, u, v, w});
  }

  NodeId n_;
  TensorSpec spec_;
  std::vector<CornerTerm> terms_;
};

/// Applies the nonlinear operator T_p to a nonnegative vector.
inline std::vector<double> tensor_apply(const Graph& g, const TriangleSet& ts,
                                        TensorSpec spec, double p,
                                        std::span<const double> x) {
  if (x.size() != static_cast<std::size_t>(g.node_count()))
    throw Error("tensor_apply: vector length does not match node count");
  for (const double v : x)
    if (v < 0.0) throw Error("tensor_apply: input vector must be nonnegative");
  TensorOperator op(g, ts, spec);
  std::vector<double> out(g.node_count());
  op.apply(p, x, out);
  return out;
}

/// Compressed sparse row matrix, used for the p = 1 linearizations.
struct SparseMatrix {
  NodeId rows = 0, cols = 0;
  std::vector<std::int64_t> row_offsets;
  std::vector<NodeId> col_index;
  std::vector<double> values;

  std::vector<double> multiply(std::span<const double> x) const {
    std::vector<double> out(rows, 0.0);
    for (NodeId i = 0; i < rows; ++i) {
      double s = 0.0;
      for (std::int64_t s_idx = row_offsets[i]; s_idx < row_offsets[i + 1]; ++s_idx)
        s += values[s_idx] * x[col_index[s_idx]];
      out[i] = s;
    }
    return out;
  }

  double value_at(NodeId i, NodeId j) const {
    for (std::int64_t s = row_offsets[i]; s < row_offsets[i + 1]; ++s)
      if (col_index[s] == j) return values[s];
    return 0.0;
  }
};

/// The matrix with entries sum_k T_ijk, valid because every variant satisfies
/// T_ijk = T_ikj. For the binary tensor this is the edge-restricted product
/// of the adjacency matrix with its square; the other variants are its row
/// rescalings. At p = 1 the tensor operator reduces to this matrix.
inline SparseMatrix linearized_matrix(const Graph& g, const TriangleSet& ts,
                                      TensorSpec spec) {
  SparseMatrix m;
  m.rows = m.cols = g.node_count();
  m.row_offsets.resize(g.node_count() + 1);
  m.col_index.resize(g.slot_count());
  m.values.assign(g.slot_count(), 0.0);
  for (NodeId i = 0; i <= g.node_count(); ++i)
    m.row_offsets[i] = (i < g.node_count()) ? g.row_offset(i)
                                            : static_cast<std::int64_t>(g.slot_count());
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const auto row = g.neighbors(i);
    for (std::size_t s = 0; s < row.size(); ++s) m.col_index[g.row_offset(i) + s] = row[s];
  }

  const auto weight = [&](NodeId i, NodeId j, NodeId k) -> double {
    switch (spec.variant) {
      case TensorVariant::Binary:
        return 1.0;
      case TensorVariant::RandomWalk:
        return 1.0 / static_cast<double>(ts.per_edge_count[g.edge_slot(j, k)]);
      case TensorVariant::Clustering: {
        const std::int64_t d = g.degree(i);
        return 1.0 / static_cast<double>(d * (d - 1));
      }
      case TensorVariant::Closure:
        return 1.0 / static_cast<double>(ts.path2_count[i]);
    }
    return 0.0;
  };

  for (const auto& [a, b, c] : ts.triangles) {
    m.values[g.edge_slot(a, b)] += weight(a, b, c);
    m.values[g.edge_slot(a, c)] += weight(a, c, b);
    m.values[g.edge_slot(b, a)] += weight(b, a, c);
    m.values[g.edge_slot(b, c)] += weight(b, c, a);
    m.values[g.edge_slot(c, a)] += weight(c, a, b);
    m.values[g.edge_slot(c, b)] += weight(c, b, a);
  }
  return m;
}

}  // namespace hocent
