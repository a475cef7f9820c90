#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pdlab/census.hpp"
#include "pdlab/characterizations.hpp"
#include "pdlab/constructors.hpp"
#include "pdlab/error.hpp"
#include "pdlab/forcing.hpp"
#include "pdlab/solvers.hpp"

using namespace pdlab;

namespace {

Graph fam(FamilySpec s) { return make_family(std::move(s)); }

Graph cycle_union_complement(const std::vector<std::size_t>& lengths) {
  Graph u;
  for (auto len : lengths) u = disjoint_union(u, fam(FamilySpec::cycle(len)));
  return complement(u);
}

}  // namespace

TEST_SUITE("characterizations") {
  TEST_CASE("universal vertex") {
    CHECK(has_universal_vertex(fam(FamilySpec::wheel(7))) == Vertex{0});
    CHECK_FALSE(has_universal_vertex(fam(FamilySpec::cycle(5))).has_value());
    CHECK(has_universal_vertex(fam(FamilySpec::path(1))) == Vertex{0});
  }

  TEST_CASE("universal edge") {
    CHECK(has_universal_edge(fam(FamilySpec::star(7))) == Edge{0, 1});
    CHECK(has_universal_edge(fam(FamilySpec::path(4))) == Edge{1, 2});
    CHECK_FALSE(has_universal_edge(fam(FamilySpec::cycle(5))).has_value());
    CHECK(has_universal_edge(fam(FamilySpec::path(2))) == Edge{0, 1});
    // Direct definition on random graphs.
    std::mt19937_64 rng(8);
    for (int i = 0; i < 100; ++i) {
      const Graph g = random_graph(rng, 2 + i % 8, 0.4);
      std::optional<Edge> expected;
      for (const Edge& e : g.edges()) {
        bool all = true;
        for (const Edge& f : g.edges()) all = all && (e == f || e.shares_endpoint(f));
        if (all) {
          expected = e;
          break;
        }
      }
      CHECK(has_universal_edge(g) == expected);
    }
  }

  TEST_CASE("anti-cycle vertices") {
    CHECK(anti_cycle_vertices(fam(FamilySpec::cycle(7))) == VertexSet::range(7));
    CHECK(anti_cycle_vertices(fam(FamilySpec::complete(4))).empty());
    CHECK(anti_cycle_vertices(fam(FamilySpec::bipartite(2, 4))) == VertexSet{0, 1});
  }

  TEST_CASE("max-degree bound") {
    const Graph cocktail = complement(disjoint_union(
        disjoint_union(fam(FamilySpec::complete(2)), fam(FamilySpec::complete(2))), fam(FamilySpec::complete(2))));
    CHECK(max_degree_gamma_p_bound(cocktail).exact());
    CHECK(max_degree_gamma_p_bound(cocktail).lo == 1);
    const auto c7 = max_degree_gamma_p_bound(complement(fam(FamilySpec::cycle(7))));
    CHECK(c7.lo == 1);
    CHECK(c7.hi == 2);
    const auto p10 = max_degree_gamma_p_bound(fam(FamilySpec::path(10)));
    CHECK(p10.hi == 10);
    CHECK_THROWS_AS(max_degree_gamma_p_bound(build_graph(3, {{0, 1}})), Error);
  }

  TEST_CASE("bound encloses gamma_p on the census") {
    for (const Graph& g : connected_census(1, 7)) {
      const auto b = max_degree_gamma_p_bound(g);
      const auto v = gamma_p(g).value;
      CHECK(b.encloses(v));
      if (metrics(g).max_degree + 2 >= g.order()) CHECK(v == 1);
    }
  }

  TEST_CASE("twin test") {
    CHECK(singleton_pd_twin_test(fam(FamilySpec::cycle(5)), 0));
    CHECK(is_power_dominating_set(fam(FamilySpec::cycle(5)), {0}));
    const Graph c6bar = complement(fam(FamilySpec::cycle(6)));
    CHECK(singleton_pd_twin_test(c6bar, 0) == is_power_dominating_set(c6bar, {0}));
    CHECK_THROWS_AS(singleton_pd_twin_test(fam(FamilySpec::cycle(6)), 0), Error);
  }

  TEST_CASE("twin test matches monitoring on the census") {
    for (const Graph& g : connected_census(4, 7))
      for (Vertex u = 0; u < g.order(); ++u)
        if (g.degree(u) + 3 == g.order()) CHECK(singleton_pd_twin_test(g, u) == is_power_dominating_set(g, {u}));
  }

  TEST_CASE("(n-3)-regular characterization") {
    CHECK(n3_regular_gamma_p(fam(FamilySpec::cycle(5))) == 1);
    const Graph k33 = cycle_union_complement({3, 3});
    CHECK(n3_regular_gamma_p(k33) == gamma_p(k33).value);
    const Graph c7bar = complement(fam(FamilySpec::cycle(7)));
    CHECK(n3_regular_gamma_p(c7bar) == gamma_p(c7bar).value);
    for (const auto& parts : std::vector<std::vector<std::size_t>>{{8}, {3, 5}, {4, 4}, {9}, {3, 6}, {4, 5}, {3, 3, 3},
                                                                   {10}, {3, 7}, {4, 6}, {5, 5}, {3, 3, 4}}) {
      const Graph g = cycle_union_complement(parts);
      CHECK(n3_regular_gamma_p(g) == gamma_p(g).value);
    }
    CHECK_THROWS_AS(n3_regular_gamma_p(fam(FamilySpec::cycle(6))), Error);
  }

  TEST_CASE("(n-4)-regular special triples") {
    const Graph k444 = fam(FamilySpec::multipartite({4, 4, 4}));
    CHECK(find_special_triples(k444).empty());
    CHECK(gamma_p(k444).value == 2);
    CHECK_THROWS_AS(find_special_triples(fam(FamilySpec::cycle(7))), Error);
    std::mt19937_64 rng(17);
    for (int i = 0; i < 10; ++i) {
      const Graph g = complement(random_cubic_graph(rng, 8));
      if (!is_connected(g)) continue;
      for (const auto& t : find_special_triples(g)) {
        const auto [a, b, c] = t.vertices;
        const int edges = g.adjacent(a, b) + g.adjacent(a, c) + g.adjacent(b, c);
        CHECK(edges == (t.shape == TripleShape::pathlike ? 2 : 3));
        const auto [x, y] = t.witness;
        CHECK((g.closed_neighbors(x) - g.closed_neighbors(y)).count() == 1);
      }
    }
  }

  TEST_CASE("complete multipartite formula") {
    CHECK(multipartite_gamma_p({1, 5}, DeletedEdgeClass::none) == 1);
    CHECK(multipartite_gamma_p({3, 3}, DeletedEdgeClass::touches_smallest) == 1);
    CHECK(multipartite_gamma_p({4, 4}, DeletedEdgeClass::touches_smallest) == 2);
    CHECK_THROWS_AS(multipartite_gamma_p({4, 4}, DeletedEdgeClass::misses_smallest), Error);
    CHECK_THROWS_AS(multipartite_gamma_p({5, 3}, DeletedEdgeClass::none), Error);
    for (std::size_t a = 1; a <= 5; ++a)
      for (std::size_t b = a; a + b <= 10; ++b) {
        const std::vector<std::size_t> parts{a, b};
        CHECK(multipartite_gamma_p(parts, DeletedEdgeClass::none) ==
              gamma_p(fam(FamilySpec::multipartite(parts))).value);
      }
  }
}
