#include "pdlab/characterizations.hpp"

#include <algorithm>
#include <numeric>

#include "pdlab/error.hpp"

namespace pdlab {

namespace {

[[noreturn]] void precondition(const std::string& what) {
  throw Error(ErrorCode::precondition, what);
}

std::size_t closed_difference(const Graph& g, Vertex x, Vertex y) {
  return (g.closed_neighbors(x) - g.closed_neighbors(y)).count();
}

void require_regular(const Graph& g, std::size_t degree, std::size_t min_order, const char* name) {
  if (g.order() < min_order)
    precondition(std::string(name) + " needs n >= " + std::to_string(min_order));
  if (!is_connected(g)) precondition(std::string(name) + " needs a connected graph");
  for (auto d : g.degrees())
    if (d != degree)
      precondition(std::string(name) + " needs a " + std::to_string(degree) + "-regular graph");
}

}  // namespace

std::optional<Vertex> has_universal_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) + 1 == g.order()) return v;
  return std::nullopt;
}

std::optional<Edge> has_universal_edge(const Graph& g) {
  // uv meets every edge iff m = deg(u) + deg(v) - 1.
  for (const Edge& e : g.edges())
    if (g.degree(e.u) + g.degree(e.v) == g.size() + 1) return e;
  return std::nullopt;
}

VertexSet anti_cycle_vertices(const Graph& g) {
  VertexSet out;
  const VertexSet all = g.vertices();
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexSet rest = all;
    rest.erase(v);
    if (is_acyclic(induced_subgraph(g, rest))) out.insert(v);
  }
  return out;
}

GammaPBound max_degree_gamma_p_bound(const Graph& g) {
  if (!is_connected(g)) precondition("max-degree bound needs a connected graph");
  const std::size_t n = g.order();
  const std::size_t delta = metrics(g).max_degree;
  if (delta + 2 >= n) return {1, 1};
  if (delta + 4 >= n) return {1, 2};
  return {1, n};
}

bool singleton_pd_twin_test(const Graph& g, Vertex u) {
  const std::size_t n = g.order();
  if (n < 4) precondition("twin test needs n >= 4");
  if (!is_connected(g)) precondition("twin test needs a connected graph");
  if (g.degree(u) + 3 != n) precondition("twin test needs deg(u) = n - 3");
  const VertexSet outside = g.vertices() - g.closed_neighbors(u);
  const auto w = outside.to_vector();
  return !are_twins(g, w[0], w[1]);
}

std::size_t n3_regular_gamma_p(const Graph& g) {
  require_regular(g, g.order() >= 3 ? g.order() - 3 : 0, 5, "(n-3)-regular characterization");
  for (const Edge& e : g.edges())
    if (closed_difference(g, e.v, e.u) == 1 || closed_difference(g, e.u, e.v) == 1) return 1;
  return 2;
}

std::vector<SpecialTriple> find_special_triples(const Graph& g) {
  require_regular(g, g.order() >= 4 ? g.order() - 4 : 0, 6, "(n-4)-regular characterization");
  std::vector<SpecialTriple> out;
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c) {
        const std::array<Vertex, 3> t{a, b, c};
        const int ab = g.adjacent(a, b), ac = g.adjacent(a, c), bc = g.adjacent(b, c);
        const int edges = ab + ac + bc;
        if (edges == 2) {
          const Vertex mid = !bc ? a : (!ac ? b : c);
          for (Vertex x : t) {
            if (x == mid) continue;
            if (closed_difference(g, mid, x) == 1) {
              out.push_back({t, TripleShape::pathlike, {mid, x}, false});
              break;
            }
          }
        } else if (edges == 3) {
          std::optional<std::pair<Vertex, Vertex>> pair;
          for (Vertex x : t)
            for (Vertex y : t)
              if (x != y && !pair && closed_difference(g, x, y) == 1) pair = {x, y};
          if (!pair) continue;
          bool strict = false;
          for (Vertex w : t) {
            bool both = true;
            for (Vertex x : t)
              if (x != w && closed_difference(g, w, x) != 1) both = false;
            strict = strict || both;
          }
          out.push_back({t, TripleShape::trianglelike, *pair, strict});
        }
      }
  return out;
}

std::vector<Edge> multipartite_edges_in_class(const std::vector<std::size_t>& parts,
                                              DeletedEdgeClass cls) {
  std::vector<std::size_t> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) part_of.insert(part_of.end(), parts[p], p);
  const std::size_t smallest = parts.empty() ? 0 : *std::min_element(parts.begin(), parts.end());
  std::vector<Edge> out;
  for (Vertex a = 0; a < part_of.size(); ++a)
    for (Vertex b = a + 1; b < part_of.size(); ++b) {
      if (part_of[a] == part_of[b]) continue;
      const bool touches = parts[part_of[a]] == smallest || parts[part_of[b]] == smallest;
      if (cls == DeletedEdgeClass::touches_smallest && !touches) continue;
      if (cls == DeletedEdgeClass::misses_smallest && touches) continue;
      out.push_back({a, b});
    }
  return out;
}

std::size_t multipartite_gamma_p(const std::vector<std::size_t>& parts, DeletedEdgeClass deleted) {
  if (parts.size() < 2) throw Error(ErrorCode::invalid_argument, "need at least two parts");
  if (!std::is_sorted(parts.begin(), parts.end()))
    throw Error(ErrorCode::invalid_argument, "part sizes must be sorted ascending");
  if (parts.front() < 1) throw Error(ErrorCode::invalid_argument, "part sizes must be >= 1");
  const std::size_t r1 = parts.front();
  if (deleted == DeletedEdgeClass::none) return r1 <= 2 ? 1 : 2;
  if (multipartite_edges_in_class(parts, deleted).empty())
    throw Error(ErrorCode::invalid_argument, "no edge of the requested class exists");
  if (parts.size() == 2 && r1 == 1)
    precondition("deleting an edge of K_{1,r} disconnects it");
  if (r1 <= 2) return 1;
  if (r1 == 3) return deleted == DeletedEdgeClass::touches_smallest ? 1 : 2;
  return 2;
}

}  // namespace pdlab
