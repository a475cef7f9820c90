#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "pdlab/census.hpp"
#include "pdlab/constructors.hpp"
#include "pdlab/error.hpp"
#include "pdlab/graph.hpp"

using namespace pdlab;

namespace {

Graph fam(FamilySpec s) { return make_family(std::move(s)); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::unknown_name;
}

}  // namespace

TEST_SUITE("graph-core") {
  TEST_CASE("build_graph normalizes and deduplicates") {
    const Graph p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(p4.order() == 4);
    CHECK(p4.size() == 3);
    const Graph dup = build_graph(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.size() == 1);
    CHECK(dup.degree(2) == 0);
    const Graph h = build_graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {1, 4}});
    auto d = h.degrees();
    std::sort(d.begin(), d.end());
    CHECK(d == std::vector<std::size_t>{1, 1, 1, 1, 3, 3});
  }

  TEST_CASE("build_graph rejects bad input") {
    CHECK(code_of([] { build_graph(3, {{0, 3}}); }) == ErrorCode::invalid_argument);
    CHECK(code_of([] { build_graph(3, {{1, 1}}); }) == ErrorCode::invalid_argument);
    CHECK(code_of([] { build_graph(kMaxVertices + 1, {}); }) == ErrorCode::cap_exceeded);
  }

  TEST_CASE("adjacency is symmetric and loop-free with consistent size") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
      const Graph g = random_graph(rng, 1 + i % 30, 0.3);
      std::size_t degree_sum = 0;
      for (Vertex u = 0; u < g.order(); ++u) {
        CHECK_FALSE(g.adjacent(u, u));
        degree_sum += g.degree(u);
        for (Vertex v : g.neighbors(u)) CHECK(g.adjacent(v, u));
      }
      CHECK(degree_sum == 2 * g.size());
      const auto edges = g.edges();
      CHECK(edges.size() == g.size());
      CHECK(std::is_sorted(edges.begin(), edges.end()));
    }
  }

  TEST_CASE("VertexSet algebra agrees with std::set") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<Vertex> id(0, kMaxVertices - 1);
    for (int round = 0; round < 200; ++round) {
      std::set<Vertex> a, b;
      VertexSet sa, sb;
      for (int i = 0; i < round % 40; ++i) {
        const Vertex x = id(rng) % (round % 2 ? 70 : kMaxVertices);
        a.insert(x);
        sa.insert(x);
        const Vertex y = id(rng) % (round % 2 ? 70 : kMaxVertices);
        b.insert(y);
        sb.insert(y);
      }
      std::vector<Vertex> uni, inter, diff;
      std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(uni));
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
      std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
      CHECK((sa | sb).to_vector() == uni);
      CHECK((sa & sb).to_vector() == inter);
      CHECK((sa - sb).to_vector() == diff);
      CHECK(sa.count() == a.size());
      CHECK(sa.intersects(sb) == !inter.empty());
      CHECK(sa.is_subset_of(sb) == std::includes(b.begin(), b.end(), a.begin(), a.end()));
      const std::vector<Vertex> va(a.begin(), a.end()), vb(b.begin(), b.end());
      CHECK((sa < sb) == (va < vb));
    }
  }

  TEST_CASE("open and closed neighborhoods") {
    CHECK(open_neighborhood(fam(FamilySpec::path(4)), {1}) == VertexSet{0, 2});
    CHECK(open_neighborhood(fam(FamilySpec::complete(4)), {0}) == VertexSet{1, 2, 3});
    CHECK(open_neighborhood(fam(FamilySpec::cycle(5)), {0, 1}) == VertexSet{4, 0, 1, 2});
    CHECK(closed_neighborhood(fam(FamilySpec::cycle(6)), {0}) == VertexSet{5, 0, 1});
    CHECK(closed_neighborhood(fam(FamilySpec::bipartite(3, 3)), {0}) == VertexSet{0, 3, 4, 5});
    CHECK(closed_neighborhood(fam(FamilySpec::cycle(6)), {}).empty());
  }

  TEST_CASE("metrics") {
    const Metrics p5 = metrics(fam(FamilySpec::path(5)));
    CHECK(p5.min_degree == 1);
    CHECK(p5.max_degree == 2);
    CHECK(p5.connected);
    CHECK(p5.diameter == 4);
    const Metrics k5 = metrics(fam(FamilySpec::complete(5)));
    CHECK(k5.min_degree == 4);
    CHECK(k5.max_degree == 4);
    CHECK(k5.diameter == 1);
    const Metrics split = metrics(build_graph(3, {{0, 1}}));
    CHECK(split.min_degree == 0);
    CHECK(split.max_degree == 1);
    CHECK_FALSE(split.connected);
    CHECK_FALSE(split.diameter.has_value());
    CHECK(code_of([] { metrics(Graph{}); }) == ErrorCode::precondition);
  }

  TEST_CASE("components and distances") {
    const Graph g = build_graph(6, {{0, 3}, {1, 2}, {3, 5}});
    const auto comps = components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == VertexSet{0, 3, 5});
    CHECK(comps[1] == VertexSet{1, 2});
    CHECK(comps[2] == VertexSet{4});
    const auto d = distances_from(g, 0);
    CHECK(d[5] == 2);
    CHECK(d[1] == kMaxVertices);
  }

  TEST_CASE("twins") {
    CHECK(are_twins(fam(FamilySpec::complete(4)), 0, 1));
    CHECK(are_twins(fam(FamilySpec::cycle(4)), 0, 2));
    CHECK_FALSE(are_twins(fam(FamilySpec::path(4)), 0, 3));
    CHECK(code_of([] { are_twins(fam(FamilySpec::path(3)), 1, 1); }) == ErrorCode::invalid_argument);
  }

  TEST_CASE("acyclicity and trees") {
    CHECK(is_acyclic(fam(FamilySpec::path(7))));
    CHECK_FALSE(is_acyclic(fam(FamilySpec::cycle(3))));
    const Graph two_paths = disjoint_union(fam(FamilySpec::path(3)), fam(FamilySpec::path(4)));
    CHECK(is_acyclic(two_paths));
    CHECK_FALSE(is_tree(two_paths));
    CHECK(is_tree(fam(FamilySpec::star(6))));
  }

  TEST_CASE("induced subgraphs") {
    CHECK(induced_subgraph(fam(FamilySpec::complete(4)), {0, 1, 2}) == fam(FamilySpec::complete(3)));
    const Graph empty3 = induced_subgraph(fam(FamilySpec::path(5)), {0, 2, 4});
    CHECK(empty3.order() == 3);
    CHECK(empty3.size() == 0);
    CHECK(induced_subgraph(fam(FamilySpec::cycle(5)), {0, 1, 2}) == fam(FamilySpec::path(3)));
  }

  TEST_CASE("delete_edge") {
    const Graph diamond = delete_edge(fam(FamilySpec::complete(4)), {0, 1});
    CHECK(diamond.size() == 5);
    CHECK_FALSE(diamond.adjacent(0, 1));
    CHECK(isomorphic(delete_edge(fam(FamilySpec::cycle(4)), {0, 1}), fam(FamilySpec::path(4))));
    const Graph k33 = fam(FamilySpec::bipartite(3, 3));
    CHECK(delete_edge(k33, {0, 3}).size() == 8);
    CHECK(code_of([&] { delete_edge(k33, {0, 1}); }) == ErrorCode::invalid_argument);
  }

  TEST_CASE("complement, union and permutation") {
    const Graph c5 = fam(FamilySpec::cycle(5));
    CHECK(isomorphic(complement(c5), c5));
    CHECK(complement(complement(c5)) == c5);
    CHECK(complement(fam(FamilySpec::complete(4))).size() == 0);
    const Graph u = disjoint_union(fam(FamilySpec::path(2)), fam(FamilySpec::path(3)));
    CHECK(u.order() == 5);
    CHECK(u.adjacent(2, 3));
    const std::vector<Vertex> perm{3, 2, 1, 0};
    CHECK(permute(fam(FamilySpec::path(4)), perm) == fam(FamilySpec::path(4)));
  }

  TEST_CASE("labels are display-only") {
    const Graph g = fam(FamilySpec::path(3));
    const Graph labeled = g.with_labels({"a", "b", "c"});
    CHECK(labeled == g);
    CHECK(labeled.display_name(1) == "b");
    CHECK(g.display_name(1) == "1");
  }
}
