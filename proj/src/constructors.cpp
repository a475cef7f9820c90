#include "pdlab/constructors.hpp"

#include <algorithm>

#include "pdlab/error.hpp"

namespace pdlab {

namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorCode::invalid_argument, what);
}

std::size_t single_param(const FamilySpec& spec, std::size_t minimum) {
  if (spec.params.size() != 1)
    invalid(family_name(spec.kind) + " takes exactly one parameter");
  if (spec.params[0] < minimum)
    invalid(family_name(spec.kind) + " needs n >= " + std::to_string(minimum));
  return spec.params[0];
}

std::string base_name(const Graph& g, Vertex v) {
  return g.has_labels() ? g.display_name(v) : "v" + std::to_string(v + 1);
}

Graph multipartite(std::vector<std::size_t> parts) {
  if (parts.size() < 2) invalid("multipartite graphs need at least two parts");
  for (auto r : parts)
    if (r < 1) invalid("part sizes must be >= 1");
  std::sort(parts.begin(), parts.end());
  std::vector<std::size_t> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) part_of.insert(part_of.end(), parts[p], p);
  const std::size_t n = part_of.size();
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (part_of[a] != part_of[b]) edges.push_back({a, b});
  return build_graph(n, edges);
}

}  // namespace

std::string family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::path: return "path";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::complete: return "complete";
    case FamilyKind::star: return "star";
    case FamilyKind::complete_bipartite: return "bipartite";
    case FamilyKind::complete_multipartite: return "kpartite";
    case FamilyKind::wheel: return "wheel";
    case FamilyKind::h_graph: return "hgraph";
    case FamilyKind::spider: return "spider";
  }
  return "?";
}

Graph make_family(FamilySpec spec) {
  std::vector<Edge> edges;
  switch (spec.kind) {
    case FamilyKind::path: {
      const auto n = single_param(spec, 1);
      for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      return build_graph(n, edges);
    }
    case FamilyKind::cycle: {
      const auto n = single_param(spec, 3);
      for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      edges.push_back({0, static_cast<Vertex>(n - 1)});
      return build_graph(n, edges);
    }
    case FamilyKind::complete: {
      const auto n = single_param(spec, 1);
      for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) edges.push_back({a, b});
      return build_graph(n, edges);
    }
    case FamilyKind::star: {
      const auto n = single_param(spec, 2);
      for (Vertex i = 1; i < n; ++i) edges.push_back({0, i});
      return build_graph(n, edges);
    }
    case FamilyKind::wheel: {
      const auto n = single_param(spec, 4);
      for (Vertex i = 1; i < n; ++i) edges.push_back({0, i});
      for (Vertex i = 1; i + 1 < n; ++i) edges.push_back({i, i + 1});
      edges.push_back({1, static_cast<Vertex>(n - 1)});
      return build_graph(n, edges);
    }
    case FamilyKind::complete_bipartite:
      if (spec.params.size() != 2) invalid("bipartite takes exactly two part sizes");
      return multipartite(spec.params);
    case FamilyKind::complete_multipartite:
      return multipartite(spec.params);
    case FamilyKind::h_graph:
      if (!spec.params.empty()) invalid("hgraph takes no parameters");
      return build_graph(6, {Edge{0, 1}, Edge{1, 2}, Edge{3, 4}, Edge{4, 5}, Edge{1, 4}});
    case FamilyKind::spider: {
      if (spec.params.empty()) invalid("spider needs at least one leg length");
      Vertex next = 1;
      for (auto len : spec.params) {
        if (len < 1) invalid("spider leg lengths must be >= 1");
        Vertex prev = 0;
        for (std::size_t i = 0; i < len; ++i, ++next) {
          edges.push_back({prev, next});
          prev = next;
        }
      }
      return build_graph(next, edges);
    }
  }
  invalid("unknown family");
}

Graph mycielskian(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  std::vector<Edge> edges = g.edges();
  for (const Edge& e : g.edges()) {
    edges.push_back({e.v, n + e.u});
    edges.push_back({e.u, n + e.v});
  }
  const Vertex apex = 2 * n;
  for (Vertex i = 0; i < n; ++i) edges.push_back({n + i, apex});
  std::vector<std::string> labels;
  for (Vertex i = 0; i < n; ++i) labels.push_back(base_name(g, i));
  for (Vertex i = 0; i < n; ++i) labels.push_back("u(" + base_name(g, i) + ")");
  labels.push_back("w");
  return build_graph(2 * n + 1, edges).with_labels(std::move(labels));
}

Graph shadow(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  std::vector<Edge> edges = g.edges();
  for (const Edge& e : g.edges()) {
    edges.push_back({e.v, n + e.u});
    edges.push_back({e.u, n + e.v});
  }
  std::vector<std::string> labels;
  for (Vertex i = 0; i < n; ++i) labels.push_back(base_name(g, i));
  for (Vertex i = 0; i < n; ++i) labels.push_back("u(" + base_name(g, i) + ")");
  return build_graph(2 * n, edges).with_labels(std::move(labels));
}

Graph central(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  const auto original = g.edges();
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (Vertex i = 0; i < n; ++i) labels.push_back(base_name(g, i));
  for (std::size_t k = 0; k < original.size(); ++k) {
    const auto s = static_cast<Vertex>(n + k);
    edges.push_back({original[k].u, s});
    edges.push_back({original[k].v, s});
    labels.push_back("[" + base_name(g, original[k].u) + "-" + base_name(g, original[k].v) + "]");
  }
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (!g.adjacent(a, b)) edges.push_back({a, b});
  return build_graph(n + original.size(), edges).with_labels(std::move(labels));
}

Graph middle(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  const auto original = g.edges();
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (Vertex i = 0; i < n; ++i) labels.push_back(base_name(g, i));
  for (std::size_t k = 0; k < original.size(); ++k) {
    const auto s = static_cast<Vertex>(n + k);
    edges.push_back({original[k].u, s});
    edges.push_back({original[k].v, s});
    for (std::size_t l = k + 1; l < original.size(); ++l)
      if (original[k].shares_endpoint(original[l]))
        edges.push_back({s, static_cast<Vertex>(n + l)});
    labels.push_back("[" + base_name(g, original[k].u) + "-" + base_name(g, original[k].v) + "]");
  }
  return build_graph(n + original.size(), edges).with_labels(std::move(labels));
}

Graph cartesian_product(const Graph& a, const Graph& b) {
  const auto nb = static_cast<Vertex>(b.order());
  const auto total = a.order() * b.order();
  if (total > kMaxVertices)
    throw Error(ErrorCode::cap_exceeded, "cartesian product order exceeds " +
                                             std::to_string(kMaxVertices));
  std::vector<Edge> edges;
  for (Vertex x = 0; x < a.order(); ++x)
    for (const Edge& e : b.edges()) edges.push_back({x * nb + e.u, x * nb + e.v});
  for (const Edge& e : a.edges())
    for (Vertex y = 0; y < nb; ++y) edges.push_back({e.u * nb + y, e.v * nb + y});
  return build_graph(total, edges);
}

Graph apply_transform(TransformKind kind, const Graph& g) {
  switch (kind) {
    case TransformKind::mycielskian: return mycielskian(g);
    case TransformKind::shadow: return shadow(g);
    case TransformKind::central: return central(g);
    case TransformKind::middle: return middle(g);
    case TransformKind::cartesian_product:
      invalid("cartesian_product takes two graphs");
  }
  invalid("unknown transform");
}

}  // namespace pdlab
