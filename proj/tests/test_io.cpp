#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "oracles.hpp"
#include "pdlab/census.hpp"
#include "pdlab/constructors.hpp"
#include "pdlab/error.hpp"
#include "pdlab/forcing.hpp"
#include "pdlab/io.hpp"

using namespace pdlab;

namespace {

Graph fam(FamilySpec s) { return make_family(std::move(s)); }

std::size_t parse_error_position(const std::string& expr) {
  try {
    parse_source(expr);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("expected a ParseError for " << expr);
  return 0;
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const std::string path = "pdlab_test_" + name;
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST_SUITE("cli-io") {
  TEST_CASE("graph6 examples") {
    CHECK(parse_graph6("A_") == fam(FamilySpec::complete(2)));
    CHECK(parse_graph6("Bw") == fam(FamilySpec::complete(3)));
    const Graph empty = parse_graph6("B?");
    CHECK(empty.order() == 3);
    CHECK(empty.size() == 0);
    CHECK(emit_graph6(fam(FamilySpec::path(3))) == "Bg");
    CHECK(emit_graph6(fam(FamilySpec::path(1))) == "@");
    CHECK(emit_graph6(Graph{}) == "?");
    CHECK(parse_graph6("Bw\n") == fam(FamilySpec::complete(3)));
  }

  TEST_CASE("graph6 errors") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("B w"), ParseError);
    CHECK_THROWS_AS(parse_graph6("C"), ParseError);
    CHECK_THROWS_AS(parse_graph6("Bww"), ParseError);
    CHECK_THROWS_AS(parse_graph6("~?@A"), ParseError);
    CHECK_THROWS_AS(parse_graph6("Bx"), ParseError);  // padding bit set
    CHECK_THROWS_AS(emit_graph6(fam(FamilySpec::path(63))), Error);
  }

  TEST_CASE("graph6 round trip against the reference encoder") {
    std::mt19937_64 rng(1234);
    for (int i = 0; i < 1000; ++i) {
      const std::size_t n = i % 41;
      const Graph g = random_graph(rng, n, 0.05 + (i % 10) / 10.0);
      const std::string line = emit_graph6(g);
      CHECK(line == oracle::graph6(oracle::to_matrix(g)));
      CHECK(parse_graph6(line) == g);
      CHECK(emit_graph6(parse_graph6(line)) == line);
    }
    for (const Graph& g : connected_census(1, 5)) CHECK(emit_graph6(g) == oracle::graph6(oracle::to_matrix(g)));
  }

  TEST_CASE("edge list round trip") {
    std::mt19937_64 rng(4321);
    for (int i = 0; i < 100; ++i) {
      const Graph g = random_graph(rng, i % 30, 0.2);
      const std::string text = emit_edge_list(g);
      CHECK(parse_edge_list(text) == g);
      CHECK(emit_edge_list(parse_edge_list(text)) == text);
    }
    CHECK(parse_edge_list("# comment\n4\n0 1\n\n2 3 # trailing\n").size() == 2);
    CHECK(parse_edge_list("3\n").order() == 3);
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n0 x\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n0 3\n"), Error);
  }

  TEST_CASE("source expressions") {
    CHECK(isomorphic(parse_source("central(path:3)"), fam(FamilySpec::cycle(5))));
    CHECK(parse_source("prod(complete:3,complete:3)") ==
          cartesian_product(fam(FamilySpec::complete(3)), fam(FamilySpec::complete(3))));
    CHECK(parse_source("g6:Bw") == fam(FamilySpec::complete(3)));
    CHECK(parse_source("middle(cycle:7)") == middle(fam(FamilySpec::cycle(7))));
    CHECK(parse_source("mu(mu(path:3))") == mycielskian(mycielskian(fam(FamilySpec::path(3)))));
    CHECK(parse_source("kpartite:2,3,4") == fam(FamilySpec::multipartite({2, 3, 4})));
    CHECK(parse_source("prod(bipartite:1,2,kpartite:1,1,2)") ==
          cartesian_product(fam(FamilySpec::bipartite(1, 2)), fam(FamilySpec::multipartite({1, 1, 2}))));
    CHECK(parse_source("spider:1,2") == fam(FamilySpec::spider({1, 2})));
    CHECK(parse_source("hgraph") == fam(FamilySpec::h_graph()));
    CHECK(parse_source("shadow(wheel:5)") == shadow(fam(FamilySpec::wheel(5))));
    CHECK(parse_source("  star:4 ") == fam(FamilySpec::star(4)));
  }

  TEST_CASE("source expression errors carry positions") {
    CHECK(parse_error_position("path:") == 5);
    CHECK(parse_error_position("blob:3") == 0);
    CHECK(parse_error_position("mu(path:3") == 9);
    CHECK(parse_error_position("middle(path:3))") == 14);
    CHECK(parse_error_position("twist(path:3)") == 0);
    CHECK(parse_error_position("prod(path:2)") == 11);
    CHECK(parse_error_position("cycle:2") == 0);
    CHECK(parse_error_position("g6:Bx") == 4);
    CHECK_THROWS_AS(parse_source("file:/nonexistent/pdlab"), Error);
    try {
      parse_source("complete:600");
      FAIL("expected an error");
    } catch (const ParseError&) {
      FAIL("cap overflow is not a syntax error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::cap_exceeded);
    }
  }

  TEST_CASE("graph files") {
    const std::string edges = temp_file("edges.txt", "4\n0 1\n1 2\n2 3\n");
    const std::string g6 = temp_file("graph.g6", ">>graph6<<Bw\n");
    CHECK(read_graph_file(edges) == fam(FamilySpec::path(4)));
    CHECK(read_graph_file(g6) == fam(FamilySpec::complete(3)));
    CHECK(parse_source("middle(file:" + edges + ")") == middle(fam(FamilySpec::path(4))));
    std::remove(edges.c_str());
    std::remove(g6.c_str());
    CHECK_THROWS_AS(read_graph_file("/nonexistent/pdlab"), Error);
  }

  TEST_CASE("dot output") {
    const std::string k3 = emit_dot(fam(FamilySpec::complete(3)));
    CHECK(k3.find("graph G {") == 0);
    CHECK(std::count(k3.begin(), k3.end(), '\n') == 2 + 3 + 3);
    CHECK(k3.find("0 -- 1;") != std::string::npos);
    const Graph p4 = fam(FamilySpec::path(4));
    const auto t = zero_forcing_closure(p4, {0});
    const std::string overlay = emit_dot(p4, &t);
    CHECK(overlay.find("0 -- 1 [dir=forward") != std::string::npos);
    CHECK(overlay.find("2 -- 3 [dir=forward") != std::string::npos);
    CHECK(overlay.find("label=\"3\"") != std::string::npos);
    const Graph h = fam(FamilySpec::h_graph());
    const auto failed = monitored_trace(h, {1});
    const std::string hd = emit_dot(h, &failed);
    CHECK(hd.find("3 [label=\"3\", style=dashed") != std::string::npos);
    CHECK(hd.find("1 [label=\"1\", style=filled") != std::string::npos);
    CHECK(hd.find("0 [label=\"0\", peripheries=2") != std::string::npos);
  }

  TEST_CASE("trace rendering and vertex lists") {
    const Graph h = fam(FamilySpec::h_graph());
    const std::string text = render_trace(h, monitored_trace(h, {1}));
    CHECK(text.find("unmonitored: {3,5}") != std::string::npos);
    CHECK(parse_vertex_list("0,2,5") == VertexSet{0, 2, 5});
    CHECK(parse_vertex_list("") == VertexSet{});
    CHECK_THROWS_AS(parse_vertex_list("0,,1"), ParseError);
    CHECK_THROWS_AS(parse_vertex_list("a"), ParseError);
    CHECK(format_vertex_set({5, 0, 2}) == "0,2,5");
  }
}
