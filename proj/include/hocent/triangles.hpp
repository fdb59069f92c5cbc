#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

#include "hocent/graph.hpp"

namespace hocent {

/// Exact enumeration of the 3-cliques of a graph together with the per-node
/// and per-edge triangle counts and the wedge / length-two-path statistics
/// that the triangle tensors and coefficients are built from.
struct TriangleSet {
  std::vector<std::array<NodeId, 3>> triangles;  // ascending triples, lexicographic
  std::vector<std::int64_t> per_node_count;      // triangles at node i
  std::vector<std::int64_t> per_edge_count;      // aligned with Graph adjacency slots
  std::vector<std::int64_t> wedge_count;         // d_i (d_i - 1) / 2
  std::vector<std::int64_t> path2_count;         // w(i) = sum_{j in N(i)} (d_j - 1)

  std::int64_t count() const { return static_cast<std::int64_t>(triangles.size()); }

  /// Triangles containing edge (i, j); 0 when (i, j) is not an edge.
  std::int64_t edge_triangles(const Graph& g, NodeId i, NodeId j) const {
    const std::int64_t slot = g.edge_slot(i, j);
    return slot < 0 ? 0 : per_edge_count[slot];
  }
};

/// Degree-ordered neighbor-intersection enumeration (the "forward" scheme):
/// each edge is oriented from its lower-ranked endpoint, and the sorted
/// forward lists are merged pairwise, giving the O(m^{3/2}) bound.
inline TriangleSet enumerate_triangles(const Graph& g) {
  const NodeId n = g.node_count();
  TriangleSet ts;
  ts.per_node_count.assign(n, 0);
  ts.per_edge_count.assign(g.slot_count(), 0);
  ts.wedge_count.assign(n, 0);
  ts.path2_count.assign(n, 0);

  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    const NodeId da = g.degree(a), db = g.degree(b);
    return da != db ? da < db : a < b;
  });
  std::vector<NodeId> rank(n);
  for (NodeId r = 0; r < n; ++r) rank[order[r]] = r;

  // Forward lists: neighbors of higher rank, sorted by rank.
  std::vector<std::int64_t> fw_off(n + 1, 0);
  for (NodeId i = 0; i < n; ++i) {
    std::int64_t cnt = 0;
    for (const NodeId j : g.neighbors(i))
      if (rank[j] > rank[i]) ++cnt;
    fw_off[i + 1] = fw_off[i] + cnt;
  }
  std::vector<NodeId> fw(fw_off[n]);
  for (NodeId i = 0; i < n; ++i) {
    std::int64_t cur = fw_off[i];
    for (const NodeId j : g.neighbors(i))
      if (rank[j] > rank[i]) fw[cur++] = j;
    std::sort(fw.begin() + fw_off[i], fw.begin() + fw_off[i + 1],
              [&](NodeId a, NodeId b) { return rank[a] < rank[b]; });
  }

  for (NodeId u = 0; u < n; ++u) {
    const auto ub = fw.begin() + fw_off[u];
    const auto ue = fw.begin() + fw_off[u + 1];
    for (auto it = ub; it != ue; ++it) {
      const NodeId v = *it;
      auto a = ub;
      auto b = fw.begin() + fw_off[v];
      const auto be = fw.begin() + fw_off[v + 1];
      while (a != ue && b != be) {
        if (rank[*a] < rank[*b]) {
          ++a;
        } else if (rank[*b] < rank[*a]) {
          ++b;
        } else {
          std::array<NodeId, 3> tri{u, v, *a};
          std::sort(tri.begin(), tri.end());
          ts.triangles.push_back(tri);
          ++a;
          ++b;
        }
      }
    }
  }
  std::sort(ts.triangles.begin(), ts.triangles.end());

  for (const auto& [i, j, k] : ts.triangles) {
    ++ts.per_node_count[i];
    ++ts.per_node_count[j];
    ++ts.per_node_count[k];
    ++ts.per_edge_count[g.edge_slot(i, j)];
    ++ts.per_edge_count[g.edge_slot(j, i)];
    ++ts.per_edge_count[g.edge_slot(i, k)];
    ++ts.per_edge_count[g.edge_slot(k, i)];
    ++ts.per_edge_count[g.edge_slot(j, k)];
    ++ts.per_edge_count[g.edge_slot(k, j)];
  }
  for (NodeId i = 0; i < n; ++i) {
    const std::int64_t d = g.degree(i);
    ts.wedge_count[i] = d * (d - 1) / 2;
    std::int64_t w = 0;
    for (const NodeId j : g.neighbors(i)) w += g.degree(j) - 1;
    ts.path2_count[i] = w;
  }
  return ts;
}

}  // namespace hocent
