#pragma once

#include <array>
#include <optional>
#include <vector>

#include "pdlab/graph.hpp"

namespace pdlab {

/// Closed interval enclosing gamma_p.
struct GammaPBound {
  std::size_t lo = 1;
  std::size_t hi = 1;
  [[nodiscard]] bool exact() const { return lo == hi; }
  [[nodiscard]] bool encloses(std::size_t value) const { return lo <= value && value <= hi; }
};

enum class TripleShape { pathlike, trianglelike };

struct SpecialTriple {
  std::array<Vertex, 3> vertices{};
  TripleShape shape = TripleShape::pathlike;
  /// Ordered pair (x, y) with |N[x] \ N[y]| = 1. For pathlike triples x is
  /// the middle vertex and y an endpoint.
  std::pair<Vertex, Vertex> witness{};
  /// Triangles only: some vertex w has |N[w] \ N[x]| = 1 for both other
  /// vertices x (the stricter prose reading of the triangle condition).
  bool strict_triangle = false;
};

enum class DeletedEdgeClass {
  none,
  /// An endpoint lies in a part of the minimum size r_1.
  touches_smallest,
  /// Both endpoints lie in parts larger than r_1.
  misses_smallest,
};

/// Least vertex of degree n-1.
std::optional<Vertex> has_universal_vertex(const Graph& g);
/// Least edge sharing an endpoint with every other edge.
std::optional<Edge> has_universal_edge(const Graph& g);
/// Vertices whose removal leaves a forest.
VertexSet anti_cycle_vertices(const Graph& g);

/// Delta >= n-2: exactly 1; n-4 <= Delta <= n-3: [1, 2]; otherwise [1, n].
/// Requires a connected graph.
GammaPBound max_degree_gamma_p_bound(const Graph& g);

/// For deg(u) = n-3 with non-neighbors {w1, w2}: true iff w1 and w2 are not
/// twins, which decides whether {u} power dominates. Requires g connected,
/// n >= 4.
bool singleton_pd_twin_test(const Graph& g, Vertex u);

/// gamma_p of a connected (n-3)-regular graph, n >= 5: 1 iff some edge uv has
/// |N[v] \ N[u]| = 1, else 2.
std::size_t n3_regular_gamma_p(const Graph& g);

/// Induced pathlike and trianglelike triples of a connected (n-4)-regular
/// graph, n >= 6. An empty list predicts gamma_p = 2.
std::vector<SpecialTriple> find_special_triples(const Graph& g);

/// Closed form for K_{r_1,...,r_k}, optionally with one edge deleted.
/// Parts must be sorted ascending, k >= 2. Throws when the class has no edge
/// in the given part structure, or when deleting an edge disconnects the
/// graph (k = 2 with r_1 = 1).
std::size_t multipartite_gamma_p(const std::vector<std::size_t>& parts, DeletedEdgeClass deleted);

/// Edges of K_{parts} in the given deletion class (sorted parts, id layout of
/// make_family).
std::vector<Edge> multipartite_edges_in_class(const std::vector<std::size_t>& parts,
                                              DeletedEdgeClass cls);

}  // namespace pdlab
