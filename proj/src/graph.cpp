#include "pdlab/graph.hpp"

#include <algorithm>
#include <deque>

#include "pdlab/error.hpp"

namespace pdlab {

Edge Edge::make(Vertex a, Vertex b) {
  if (a == b) throw Error(ErrorCode::invalid_argument, "loop edge at vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  if (n > kMaxVertices)
    throw Error(ErrorCode::cap_exceeded,
                "graph order " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));
  Graph g;
  g.adj_.assign(n, VertexSet{});
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n)
      throw Error(ErrorCode::invalid_argument, "edge endpoint out of range: (" +
                                                   std::to_string(e.u) + "," +
                                                   std::to_string(e.v) + ")");
    if (e.u == e.v)
      throw Error(ErrorCode::invalid_argument, "loop edge at vertex " + std::to_string(e.u));
    g.adj_[e.u].insert(e.v);
    g.adj_[e.v].insert(e.u);
  }
  std::size_t total = 0;
  for (const auto& row : g.adj_) total += row.count();
  g.m_ = total / 2;
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.push_back({u, v});
  return out;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> d;
  d.reserve(order());
  for (const auto& row : adj_) d.push_back(row.count());
  return d;
}

std::string Graph::display_name(Vertex v) const {
  if (v < labels_.size() && !labels_[v].empty()) return labels_[v];
  return std::to_string(v);
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != order())
    throw Error(ErrorCode::invalid_argument, "label count does not match graph order");
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out;
  for (Vertex v : s) out |= g.neighbors(v);
  return out;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  return open_neighborhood(g, s) | s;
}

std::vector<std::size_t> distances_from(const Graph& g, Vertex source) {
  std::vector<std::size_t> dist(g.order(), kMaxVertices);
  std::deque<Vertex> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] != kMaxVertices) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet seen;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen.contains(s)) continue;
    VertexSet comp{s};
    VertexSet frontier{s};
    while (!frontier.empty()) {
      VertexSet next = open_neighborhood(g, frontier) - comp;
      comp |= next;
      frontier = next;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

bool is_connected(const Graph& g) { return g.order() > 0 && components(g).size() == 1; }

Metrics metrics(const Graph& g) {
  if (g.order() == 0) throw Error(ErrorCode::precondition, "metrics requires n >= 1");
  Metrics m;
  const auto deg = g.degrees();
  m.min_degree = *std::min_element(deg.begin(), deg.end());
  m.max_degree = *std::max_element(deg.begin(), deg.end());
  m.connected = is_connected(g);
  if (m.connected) {
    std::size_t diam = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
      const auto d = distances_from(g, s);
      diam = std::max(diam, *std::max_element(d.begin(), d.end()));
    }
    m.diameter = diam;
  }
  return m;
}

bool are_twins(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw Error(ErrorCode::invalid_argument, "twin test needs two distinct vertices");
  return g.neighbors(u) == g.neighbors(v) || g.closed_neighbors(u) == g.closed_neighbors(v);
}

bool is_acyclic(const Graph& g) { return g.size() + components(g).size() == g.order(); }

bool is_tree(const Graph& g) { return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g); }

Graph induced_subgraph(const Graph& g, const VertexSet& w) {
  std::vector<Vertex> keep = w.to_vector();
  std::vector<Vertex> index(g.order(), static_cast<Vertex>(kMaxVertices));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= g.order())
      throw Error(ErrorCode::invalid_argument, "induced_subgraph: vertex out of range");
    index[keep[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (Vertex a : keep) {
    for (Vertex b : g.neighbors(a) & w)
      if (a < b) edges.push_back({index[a], index[b]});
    if (g.has_labels()) labels.push_back(g.labels()[a]);
  }
  return build_graph(keep.size(), edges).with_labels(std::move(labels));
}

Graph delete_edge(const Graph& g, Edge e) {
  if (e.u >= g.order() || e.v >= g.order() || !g.adjacent(e.u, e.v))
    throw Error(ErrorCode::invalid_argument, "edge (" + std::to_string(e.u) + "," +
                                                 std::to_string(e.v) + ") is not in the graph");
  auto edges = g.edges();
  std::erase(edges, e);
  return build_graph(g.order(), edges).with_labels(g.labels());
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b = a + 1; b < g.order(); ++b)
      if (!g.adjacent(a, b)) edges.push_back({a, b});
  return build_graph(g.order(), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  const auto shift = static_cast<Vertex>(a.order());
  for (const Edge& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return build_graph(a.order() + b.order(), edges);
}

Graph permute(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order())
    throw Error(ErrorCode::invalid_argument, "permutation length does not match graph order");
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back(Edge::make(perm[e.u], perm[e.v]));
  return build_graph(g.order(), edges);
}

}  // namespace pdlab
