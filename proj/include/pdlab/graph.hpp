#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pdlab/vertex_set.hpp"

namespace pdlab {

/// Undirected edge, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  /// Normalizes endpoint order; throws on a loop.
  static Edge make(Vertex a, Vertex b);

  [[nodiscard]] bool touches(Vertex x) const { return u == x || v == x; }
  [[nodiscard]] bool shares_endpoint(const Edge& o) const {
    return touches(o.u) || touches(o.v);
  }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Rows are VertexSets, so adjacency tests and neighborhood unions are
/// word-parallel. Optional display labels never affect identity or equality.
class Graph {
 public:
  /// The null graph (n = 0).
  Graph() = default;

  [[nodiscard]] std::size_t order() const { return adj_.size(); }
  [[nodiscard]] std::size_t size() const { return m_; }

  [[nodiscard]] const VertexSet& neighbors(Vertex v) const { return adj_.at(v); }
  [[nodiscard]] std::size_t degree(Vertex v) const { return adj_.at(v).count(); }
  [[nodiscard]] bool adjacent(Vertex a, Vertex b) const { return adj_.at(a).contains(b); }
  [[nodiscard]] VertexSet closed_neighbors(Vertex v) const {
    VertexSet s = adj_.at(v);
    s.insert(v);
    return s;
  }
  [[nodiscard]] VertexSet vertices() const { return VertexSet::range(order()); }

  /// Normalized edges in ascending (u, v) order.
  [[nodiscard]] std::vector<Edge> edges() const;
  [[nodiscard]] std::vector<std::size_t> degrees() const;

  [[nodiscard]] bool has_labels() const { return !labels_.empty(); }
  [[nodiscard]] std::string display_name(Vertex v) const;
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  /// Copy with display labels attached; size must equal order() or be zero.
  [[nodiscard]] Graph with_labels(std::vector<std::string> labels) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.m_ == b.m_ && a.adj_ == b.adj_;
  }

 private:
  friend Graph build_graph(std::size_t n, std::span<const Edge> edges);

  std::vector<VertexSet> adj_;
  std::size_t m_ = 0;
  std::vector<std::string> labels_;
};

/// Builds a graph, collapsing duplicate edges. Throws on out-of-range
/// endpoints, loops, or n > kMaxVertices.
Graph build_graph(std::size_t n, std::span<const Edge> edges);
inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& s);
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

struct Metrics {
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  bool connected = false;
  /// Absent when the graph is disconnected.
  std::optional<std::size_t> diameter;
};

/// Requires n >= 1.
Metrics metrics(const Graph& g);

[[nodiscard]] bool is_connected(const Graph& g);
/// Vertex sets of the connected components, ordered by least member.
std::vector<VertexSet> components(const Graph& g);
/// BFS distances from a source; kMaxVertices marks unreachable.
std::vector<std::size_t> distances_from(const Graph& g, Vertex source);

/// N(u) = N(v) or N[u] = N[v]. Throws when u == v.
bool are_twins(const Graph& g, Vertex u, Vertex v);

/// True iff g is a forest.
bool is_acyclic(const Graph& g);
/// Connected forest with n >= 1.
bool is_tree(const Graph& g);

/// G[W], relabeled by ascending original id.
Graph induced_subgraph(const Graph& g, const VertexSet& w);
/// Throws when e is not an edge of g.
Graph delete_edge(const Graph& g, Edge e);

Graph complement(const Graph& g);
/// Vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);
/// Relabels vertex v to perm[v].
Graph permute(const Graph& g, std::span<const Vertex> perm);

}  // namespace pdlab
