#include "pdlab/census.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "pdlab/error.hpp"

namespace pdlab {

namespace {

void require_canonical_order(std::size_t n) {
  if (n > kMaxCanonicalOrder)
    throw Error(ErrorCode::cap_exceeded, "canonical form supports n <= " +
                                             std::to_string(kMaxCanonicalOrder) + ", got " +
                                             std::to_string(n));
}

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

struct Minimizer {
  std::size_t n = 0;
  std::array<std::array<bool, kMaxCanonicalOrder>, kMaxCanonicalOrder> adj{};
  std::uint64_t best = ~std::uint64_t{0};
  std::array<Vertex, kMaxCanonicalOrder> best_perm{};

  // perm[i] is the original vertex placed at canonical position i.
  void run() {
    std::array<Vertex, kMaxCanonicalOrder> perm{};
    std::iota(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n), Vertex{0});
    const std::size_t total_bits = pair_count(n);
    do {
      std::uint64_t code = 0;
      std::size_t used = 0;
      bool worse = false;
      for (std::size_t j = 1; j < n && !worse; ++j) {
        for (std::size_t i = 0; i < j; ++i) code = (code << 1) | (adj[perm[i]][perm[j]] ? 1u : 0u);
        used += j;
        const std::uint64_t best_prefix = best >> (total_bits - used);
        if (code > best_prefix) worse = true;
      }
      if (!worse && code < best) {
        best = code;
        best_perm = perm;
      }
    } while (std::next_permutation(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n)));
    if (n <= 1) best = 0;
  }
};

Minimizer minimize(const Graph& g) {
  require_canonical_order(g.order());
  Minimizer m;
  m.n = g.order();
  for (Vertex u = 0; u < m.n; ++u)
    for (Vertex v : g.neighbors(u)) m.adj[u][v] = true;
  m.run();
  return m;
}

}  // namespace

std::uint64_t adjacency_code(const Graph& g) {
  require_canonical_order(g.order());
  std::uint64_t code = 0;
  for (Vertex j = 1; j < g.order(); ++j)
    for (Vertex i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(i, j) ? 1u : 0u);
  return code;
}

Graph graph_from_code(std::size_t n, std::uint64_t code) {
  require_canonical_order(n);
  std::vector<Edge> edges;
  std::size_t bit = pair_count(n);
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      --bit;
      if ((code >> bit) & 1u) edges.push_back({i, j});
    }
  return build_graph(n, edges);
}

std::uint64_t canonical_code(const Graph& g) { return minimize(g).best; }

Graph canonical_form(const Graph& g) { return graph_from_code(g.order(), canonical_code(g)); }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  auto da = a.degrees();
  auto db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_code(a) == canonical_code(b);
}

const std::vector<Graph>& enumerate_connected_graphs(std::size_t n) {
  if (n < 1 || n > kMaxCensusOrder)
    throw Error(ErrorCode::cap_exceeded, "census supports 1 <= n <= " +
                                             std::to_string(kMaxCensusOrder) + ", got " +
                                             std::to_string(n));
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<Graph>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<Graph> result;
  if (n == 1) {
    result.push_back(build_graph(1, {}));
  } else {
    // Every connected graph has a non-cut vertex, so each class on n vertices
    // arises from a class on n-1 vertices plus one vertex with a nonempty
    // neighborhood.
    const auto& smaller = enumerate_connected_graphs(n - 1);
    std::set<std::uint64_t> codes;
    for (const Graph& base : smaller) {
      const auto base_edges = base.edges();
      for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
        auto edges = base_edges;
        for (Vertex v = 0; v + 1 < n; ++v)
          if ((mask >> v) & 1u) edges.push_back({v, static_cast<Vertex>(n - 1)});
        codes.insert(canonical_code(build_graph(n, edges)));
      }
    }
    for (std::uint64_t code : codes) result.push_back(graph_from_code(n, code));
  }
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(result)).first->second;
}

std::vector<Graph> connected_census(std::size_t lo, std::size_t hi) {
  std::vector<Graph> out;
  for (std::size_t n = lo; n <= hi; ++n) {
    const auto& level = enumerate_connected_graphs(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

Graph random_tree(std::mt19937_64& rng, std::size_t n) {
  if (n <= 1) return build_graph(n, {});
  if (n == 2) return build_graph(2, {Edge{0, 1}});
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = pick(rng);
  std::vector<std::size_t> degree(n, 1);
  for (Vertex c : code) ++degree[c];
  std::vector<Edge> edges;
  std::set<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  for (Vertex c : code) {
    const Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.push_back(Edge::make(leaf, c));
    if (--degree[c] == 1) leaves.insert(c);
  }
  const Vertex a = *leaves.begin();
  const Vertex b = *std::next(leaves.begin());
  edges.push_back(Edge::make(a, b));
  return build_graph(n, edges);
}

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (coin(rng)) edges.push_back({a, b});
  return build_graph(n, edges);
}

Graph random_connected_graph(std::mt19937_64& rng, std::size_t n, double p) {
  auto edges = random_tree(rng, n).edges();
  std::bernoulli_distribution coin(p);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (coin(rng)) edges.push_back({a, b});
  return build_graph(n, edges);
}

Graph random_cubic_graph(std::mt19937_64& rng, std::size_t n) {
  if (n % 2 != 0 || n < 4)
    throw Error(ErrorCode::invalid_argument, "cubic graphs need an even order >= 4");
  std::vector<Vertex> points;
  for (Vertex v = 0; v < n; ++v) points.insert(points.end(), 3, v);
  for (;;) {
    std::shuffle(points.begin(), points.end(), rng);
    std::set<Edge> edges;
    bool ok = true;
    for (std::size_t i = 0; i < points.size() && ok; i += 2) {
      if (points[i] == points[i + 1]) {
        ok = false;
        break;
      }
      ok = edges.insert(Edge::make(points[i], points[i + 1])).second;
    }
    if (ok) return build_graph(n, std::vector<Edge>(edges.begin(), edges.end()));
  }
}

}  // namespace pdlab
