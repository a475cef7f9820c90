#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "pdlab/census.hpp"
#include "pdlab/constructors.hpp"
#include "pdlab/error.hpp"

using namespace pdlab;

TEST_SUITE("census") {
  TEST_CASE("connected class counts match a brute-force census") {
    const std::size_t expected[] = {0, 1, 1, 2, 6, 21, 112, 853};
    for (std::size_t n = 1; n <= kMaxCensusOrder; ++n) CHECK(enumerate_connected_graphs(n).size() == expected[n]);
    for (std::size_t n = 1; n <= 5; ++n) CHECK(enumerate_connected_graphs(n).size() == oracle::connected_class_count(n));
  }

  TEST_CASE("small census contents") {
    const auto& three = enumerate_connected_graphs(3);
    REQUIRE(three.size() == 2);
    std::set<std::size_t> sizes{three[0].size(), three[1].size()};
    CHECK(sizes == std::set<std::size_t>{2, 3});
    CHECK(enumerate_connected_graphs(1)[0].order() == 1);
    CHECK_THROWS_AS(enumerate_connected_graphs(0), Error);
    CHECK_THROWS_AS(enumerate_connected_graphs(kMaxCensusOrder + 1), Error);
  }

  TEST_CASE("census classes are connected and pairwise non-isomorphic") {
    for (std::size_t n = 1; n <= 6; ++n) {
      std::set<std::uint64_t> codes;
      for (const Graph& g : enumerate_connected_graphs(n)) {
        CHECK(is_connected(g));
        CHECK(canonical_code(g) == adjacency_code(g));
        codes.insert(canonical_code(g));
      }
      CHECK(codes.size() == enumerate_connected_graphs(n).size());
    }
  }

  TEST_CASE("canonical form is a relabeling invariant") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
      const std::size_t n = 1 + i % kMaxCanonicalOrder;
      const Graph g = random_graph(rng, n, 0.45);
      std::vector<Vertex> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const Graph h = permute(g, perm);
      CHECK(canonical_code(g) == canonical_code(h));
      CHECK(isomorphic(g, h));
      CHECK(canonical_form(g) == canonical_form(h));
      CHECK(graph_from_code(n, adjacency_code(g)) == g);
    }
    CHECK_FALSE(isomorphic(make_family(FamilySpec::path(4)), make_family(FamilySpec::star(4))));
  }

  TEST_CASE("random generators") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
      const std::size_t n = 2 + i % 15;
      CHECK(is_tree(random_tree(rng, n)));
      CHECK(random_tree(rng, n).order() == n);
      CHECK(is_connected(random_connected_graph(rng, n, 0.2)));
      const Graph c = random_cubic_graph(rng, 2 * (2 + i % 6));
      for (auto d : c.degrees()) CHECK(d == 3);
    }
    std::mt19937_64 a(9), b(9);
    CHECK(random_connected_graph(a, 10, 0.3) == random_connected_graph(b, 10, 0.3));
  }
}

TEST_SUITE("constructors") {
  TEST_CASE("families") {
    const Graph p4 = make_family(FamilySpec::path(4));
    CHECK(p4.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    const Graph k33 = make_family(FamilySpec::multipartite({3, 3}));
    CHECK(k33.size() == 9);
    for (auto d : k33.degrees()) CHECK(d == 3);
    const Graph star = make_family(FamilySpec::star(5));
    CHECK(star.degree(0) == 4);
    CHECK(star.size() == 4);
    const Graph w = make_family(FamilySpec::wheel(7));
    CHECK(w.degree(0) == 6);
    CHECK(w.size() == 12);
    const Graph s = make_family(FamilySpec::spider({2, 3, 4}));
    CHECK(s.order() == 10);
    CHECK(is_tree(s));
    CHECK(make_family(FamilySpec::multipartite({4, 1, 2})).degree(0) == 6);
  }

  TEST_CASE("family validation") {
    CHECK_THROWS_AS(make_family(FamilySpec::cycle(2)), Error);
    CHECK_THROWS_AS(make_family(FamilySpec::wheel(3)), Error);
    CHECK_THROWS_AS(make_family(FamilySpec::multipartite({3})), Error);
    CHECK_THROWS_AS(make_family(FamilySpec::path(0)), Error);
  }

  TEST_CASE("mycielskian") {
    const Graph c5 = make_family(FamilySpec::cycle(5));
    CHECK(isomorphic(mycielskian(make_family(FamilySpec::complete(2))), c5));
    const Graph mc4 = mycielskian(make_family(FamilySpec::cycle(4)));
    CHECK(mc4.order() == 9);
    CHECK(mc4.size() == 16);
    const Graph mp3 = mycielskian(make_family(FamilySpec::path(3)));
    CHECK(mp3.display_name(6) == "w");
  }

  TEST_CASE("shadow") {
    const Graph s = shadow(make_family(FamilySpec::complete(2)));
    CHECK(s.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}});
    CHECK(isomorphic(s, make_family(FamilySpec::path(4))));
    const Graph sc4 = shadow(make_family(FamilySpec::cycle(4)));
    CHECK(sc4.order() == 8);
    CHECK(sc4.size() == 12);
  }

  TEST_CASE("central") {
    CHECK(isomorphic(central(make_family(FamilySpec::path(3))), make_family(FamilySpec::cycle(5))));
    const Graph ck3 = central(make_family(FamilySpec::complete(3)));
    CHECK(ck3.order() == 6);
    CHECK(ck3.size() == 6);
    const Graph ck4 = central(make_family(FamilySpec::complete(4)));
    CHECK(ck4.order() == 10);
    CHECK(ck4.size() == 12);
  }

  TEST_CASE("middle") {
    const Graph mp3 = middle(make_family(FamilySpec::path(3)));
    CHECK(mp3.order() == 5);
    CHECK(mp3.size() == 5);
    std::mt19937_64 rng(13);
    for (int i = 0; i < 20; ++i) {
      const Graph g = random_graph(rng, 2 + i % 8, 0.4);
      std::size_t pairs = 0;
      for (auto d : g.degrees()) pairs += d * (d - (d > 0)) / 2;
      const Graph m = middle(g);
      CHECK(m.order() == g.order() + g.size());
      CHECK(m.size() == 2 * g.size() + pairs);
      const Graph c = central(g);
      CHECK(c.order() == g.order() + g.size());
      CHECK(c.size() == g.order() * (g.order() - 1) / 2 + g.size());
      const Graph mu = mycielskian(g);
      CHECK(mu.order() == 2 * g.order() + 1);
      CHECK(mu.size() == 3 * g.size() + g.order());
    }
  }

  TEST_CASE("cartesian product") {
    const Graph k2 = make_family(FamilySpec::complete(2));
    CHECK(isomorphic(cartesian_product(k2, k2), make_family(FamilySpec::cycle(4))));
    const Graph grid = cartesian_product(make_family(FamilySpec::path(2)), make_family(FamilySpec::path(3)));
    CHECK(grid.order() == 6);
    CHECK(grid.size() == 7);
    CHECK(grid.adjacent(0, 3));
    CHECK(grid.adjacent(0, 1));
  }

  TEST_CASE("transforms accept disconnected input") {
    const Graph g = build_graph(4, {{0, 1}});
    CHECK_NOTHROW(mycielskian(g));
    CHECK_NOTHROW(shadow(g));
    CHECK_NOTHROW(central(g));
    CHECK_NOTHROW(middle(g));
  }
}
