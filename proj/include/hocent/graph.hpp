#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <deque>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hocent/common.hpp"

namespace hocent {

using NodeId = std::int32_t;
using Label = std::int64_t;

/// Counts of the repairs applied while normalizing raw input into a simple
/// undirected graph.
struct LoadReport {
  std::int64_t self_loops_removed = 0;
  std::int64_t duplicate_edges_collapsed = 0;
  std::int64_t zero_weight_dropped = 0;
};

enum class GraphFormat { Auto, EdgeList, MatrixMarket };

/// Undirected simple graph in compressed sparse adjacency form.
///
/// Nodes are indexed 0..n-1 internally; original input labels are kept in a
/// lookup table. Neighbor lists are strictly increasing, self-loop free and
/// symmetric. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Builds a validated graph from label pairs. Self-loops are dropped,
  /// duplicates collapsed (in either orientation) and labels remapped to a
  /// dense index in ascending label order. `extra_labels` adds nodes that
  /// appear in no edge (isolated nodes).
  static Graph build(const std::vector<std::pair<Label, Label>>& edges,
                     const std::vector<Label>& extra_labels = {},
                     LoadReport* report = nullptr) {
    std::vector<Label> labels = extra_labels;
    labels.reserve(labels.size() + 2 * edges.size());
    for (const auto& [a, b] : edges) {
      labels.push_back(a);
      labels.push_back(b);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    if (labels.empty()) throw Error("empty graph (zero nodes)");

    Graph g;
    g.labels_ = std::move(labels);
    g.n_ = static_cast<NodeId>(g.labels_.size());

    std::vector<std::pair<NodeId, NodeId>> canon;
    canon.reserve(edges.size());
    std::int64_t self_loops = 0;
    for (const auto& [a, b] : edges) {
      const NodeId ia = *g.find_label(a);
      const NodeId ib = *g.find_label(b);
      if (ia == ib) {
        ++self_loops;
        continue;
      }
      canon.emplace_back(std::min(ia, ib), std::max(ia, ib));
    }
    std::sort(canon.begin(), canon.end());
    const auto last = std::unique(canon.begin(), canon.end());
    const std::int64_t duplicates = canon.end() - last;
    canon.erase(last, canon.end());
    if (report != nullptr) {
      report->self_loops_removed += self_loops;
      report->duplicate_edges_collapsed += duplicates;
    }

    g.m_ = static_cast<std::int64_t>(canon.size());
    std::vector<std::int64_t> deg(g.n_, 0);
    for (const auto& [u, v] : canon) {
      ++deg[u];
      ++deg[v];
    }
    g.offsets_.assign(g.n_ + 1, 0);
    for (NodeId i = 0; i < g.n_; ++i) g.offsets_[i + 1] = g.offsets_[i] + deg[i];
    g.adj_.resize(2 * g.m_);
    std::vector<std::int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : canon) {
      g.adj_[cursor[u]++] = v;
      g.adj_[cursor[v]++] = u;
    }
    // Edges were added in ascending canonical order, but each row still mixes
    // lower and higher endpoints; sort rows to get strictly increasing lists.
    for (NodeId i = 0; i < g.n_; ++i) {
      std::sort(g.adj_.begin() + g.offsets_[i], g.adj_.begin() + g.offsets_[i + 1]);
    }
    return g;
  }

  NodeId node_count() const { return n_; }
  std::int64_t edge_count() const { return m_; }

  std::span<const NodeId> neighbors(NodeId i) const {
    return {adj_.data() + offsets_[i], static_cast<std::size_t>(offsets_[i + 1] - offsets_[i])};
  }

  NodeId degree(NodeId i) const {
    return static_cast<NodeId>(offsets_[i + 1] - offsets_[i]);
  }

  Label label(NodeId i) const { return labels_[i]; }
  const std::vector<Label>& labels() const { return labels_; }

  std::optional<NodeId> find_label(Label lab) const {
    const auto it = std::lower_bound(labels_.begin(), labels_.end(), lab);
    if (it == labels_.end() || *it != lab) return std::nullopt;
    return static_cast<NodeId>(it - labels_.begin());
  }

  bool has_edge(NodeId i, NodeId j) const { return edge_slot(i, j) >= 0; }

  /// Index of j within the flat adjacency array of row i, or -1. Slots index
  /// the 2m directed adjacency entries; per-edge data is stored against them.
  std::int64_t edge_slot(NodeId i, NodeId j) const {
    const auto row = neighbors(i);
    const auto it = std::lower_bound(row.begin(), row.end(), j);
    if (it == row.end() || *it != j) return -1;
    return offsets_[i] + (it - row.begin());
  }

  std::int64_t slot_count() const { return static_cast<std::int64_t>(adj_.size()); }
  std::int64_t row_offset(NodeId i) const { return offsets_[i]; }

  /// Canonical edge list: ascending (i, j) with i < j, internal ids.
  std::vector<std::pair<NodeId, NodeId>> edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(m_);
    for (NodeId i = 0; i < n_; ++i) {
      for (const NodeId j : neighbors(i)) {
        if (j > i) out.emplace_back(i, j);
      }
    }
    return out;
  }

 private:
  NodeId n_ = 0;
  std::int64_t m_ = 0;
  std::vector<std::int64_t> offsets_;
  std::vector<NodeId> adj_;
  std::vector<Label> labels_;
};

/// Connected components and two-colorability of a graph.
struct ComponentReport {
  std::vector<NodeId> component_ids;
  NodeId num_components = 0;
  bool is_connected = false;
  bool is_bipartite = false;
};

inline ComponentReport components(const Graph& g) {
  const NodeId n = g.node_count();
  ComponentReport rep;
  rep.component_ids.assign(n, -1);
  std::vector<signed char> color(n, -1);
  bool bipartite = true;
  NodeId comp = 0;
  std::deque<NodeId> queue;
  for (NodeId s = 0; s < n; ++s) {
    if (rep.component_ids[s] >= 0) continue;
    rep.component_ids[s] = comp;
    color[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      const NodeId u = queue.front();
      queue.pop_front();
      for (const NodeId v : g.neighbors(u)) {
        if (rep.component_ids[v] < 0) {
          rep.component_ids[v] = comp;
          color[v] = static_cast<signed char>(1 - color[u]);
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          bipartite = false;
        }
      }
    }
    ++comp;
  }
  rep.num_components = comp;
  rep.is_connected = (comp == 1);
  rep.is_bipartite = bipartite;
  return rep;
}

namespace detail {

inline bool is_blank(std::string_view s) {
  return s.find_first_not_of(" \t\r") == std::string_view::npos;
}

inline std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' ||
                                 line[pos] == ',' || line[pos] == '\r'))
      ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' &&
           line[end] != ',' && line[end] != '\r')
      ++end;
    if (end > pos) tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

inline std::optional<std::int64_t> parse_int(std::string_view tok) {
  std::int64_t value = 0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

inline std::optional<double> parse_real(std::string_view tok) {
  double value = 0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

[[noreturn]] inline void malformed(std::int64_t line_no, const std::string& why) {
  throw Error("malformed line " + std::to_string(line_no) + ": " + why);
}

inline Graph load_edge_list(std::istream& in, LoadReport* report) {
  std::vector<std::pair<Label, Label>> edges;
  std::string line;
  std::int64_t line_no = 0;
  std::int64_t zero_weight = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view(line);
    if (is_blank(view)) continue;
    const auto first = view.find_first_not_of(" \t\r");
    if (view[first] == '#') continue;
    const auto tokens = split_tokens(view);
    if (tokens.size() < 2 || tokens.size() > 3)
      malformed(line_no, "expected 'u v' or 'u v weight'");
    const auto u = parse_int(tokens[0]);
    const auto v = parse_int(tokens[1]);
    if (!u || !v) malformed(line_no, "node ids must be integers");
    if (*u < 0 || *v < 0) malformed(line_no, "node ids must be nonnegative");
    if (tokens.size() == 3) {
      const auto w = parse_real(tokens[2]);
      if (!w) malformed(line_no, "weight must be a real number");
      if (*w == 0.0) {
        ++zero_weight;
        continue;
      }
    }
    edges.emplace_back(*u, *v);
  }
  if (report != nullptr) report->zero_weight_dropped += zero_weight;
  return Graph::build(edges, {}, report);
}

inline std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

inline Graph load_matrix_market(std::istream& in, LoadReport* report) {
  std::string line;
  if (!std::getline(in, line)) throw Error("empty Matrix Market file");
  auto header = split_tokens(line);
  if (header.size() < 4 || to_lower(header[0]) != "%%matrixmarket" ||
      to_lower(header[1]) != "matrix" || to_lower(header[2]) != "coordinate")
    throw Error("unsupported Matrix Market header (need 'matrix coordinate')");
  const std::string field = to_lower(header[3]);
  if (field != "pattern" && field != "real" && field != "integer")
    throw Error("unsupported Matrix Market field '" + field + "'");
  std::string symmetry = "general";
  if (header.size() >= 5) symmetry = to_lower(header[4]);
  if (symmetry != "general" && symmetry != "symmetric")
    throw Error("unsupported Matrix Market symmetry '" + symmetry + "'");

  std::int64_t line_no = 1;
  std::int64_t rows = 0, cols = 0, nnz = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view(line);
    if (is_blank(view)) continue;
    if (view[view.find_first_not_of(" \t\r")] == '%') continue;
    const auto tokens = split_tokens(view);
    if (tokens.size() != 3) malformed(line_no, "expected 'rows cols nnz'");
    const auto r = parse_int(tokens[0]);
    const auto c = parse_int(tokens[1]);
    const auto z = parse_int(tokens[2]);
    if (!r || !c || !z) malformed(line_no, "size line must hold three integers");
    rows = *r;
    cols = *c;
    nnz = *z;
    break;
  }
  if (rows <= 0 || cols <= 0) throw Error("empty graph (zero nodes)");
  if (rows != cols) throw Error("matrix must be square to describe a graph");

  const bool has_value = (field != "pattern");
  std::vector<std::pair<Label, Label>> edges;
  edges.reserve(nnz);
  std::int64_t seen = 0;
  std::int64_t zero_weight = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view(line);
    if (is_blank(view)) continue;
    if (view[view.find_first_not_of(" \t\r")] == '%') continue;
    const auto tokens = split_tokens(view);
    if (tokens.size() != (has_value ? 3u : 2u))
      malformed(line_no, has_value ? "expected 'i j value'" : "expected 'i j'");
    const auto i = parse_int(tokens[0]);
    const auto j = parse_int(tokens[1]);
    if (!i || !j) malformed(line_no, "indices must be integers");
    if (*i < 1 || *i > rows || *j < 1 || *j > cols)
      malformed(line_no, "index out of range");
    ++seen;
    if (has_value) {
      const auto w = parse_real(tokens[2]);
      if (!w) malformed(line_no, "value must be a real number");
      if (*w == 0.0) {
        ++zero_weight;
        continue;
      }
    }
    edges.emplace_back(*i, *j);
  }
  if (seen != nnz)
    throw Error("entry count mismatch: header declares " + std::to_string(nnz) +
                ", file holds " + std::to_string(seen));
  if (report != nullptr) report->zero_weight_dropped += zero_weight;
  std::vector<Label> universe(rows);
  for (std::int64_t i = 0; i < rows; ++i) universe[i] = i + 1;
  // 'general' files may store both orientations or only one; either way the
  // union of supports after canonicalization is the undirected graph.
  return Graph::build(edges, universe, report);
}

}  // namespace detail

inline Graph load_graph(std::istream& in, GraphFormat format = GraphFormat::Auto,
                        LoadReport* report = nullptr) {
  if (format == GraphFormat::Auto) {
    const int c = in.peek();
    format = (c == '%') ? GraphFormat::MatrixMarket : GraphFormat::EdgeList;
  }
  return format == GraphFormat::MatrixMarket ? detail::load_matrix_market(in, report)
                                             : detail::load_edge_list(in, report);
}

inline Graph load_graph_file(const std::string& path,
                             GraphFormat format = GraphFormat::Auto,
                             LoadReport* report = nullptr) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  return load_graph(in, format, report);
}

/// Writes the canonical edge list using original labels, one edge per line.
/// Reloading the output reproduces the graph exactly.
inline void write_edge_list(const Graph& g, std::ostream& out) {
  for (NodeId i = 0; i < g.node_count(); ++i) {
    for (const NodeId j : g.neighbors(i)) {
      if (j > i) out << g.label(i) << ' ' << g.label(j) << '\n';
    }
  }
}

}  // namespace hocent
