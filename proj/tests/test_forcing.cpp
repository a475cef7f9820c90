#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pdlab/census.hpp"
#include "pdlab/constructors.hpp"
#include "pdlab/forcing.hpp"

using namespace pdlab;

namespace {

Graph fam(FamilySpec s) { return make_family(std::move(s)); }

std::vector<bool> as_bools(const VertexSet& s, std::size_t n) {
  std::vector<bool> out(n);
  for (Vertex v : s) out[v] = true;
  return out;
}

VertexSet random_subset(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  VertexSet s;
  for (Vertex v = 0; v < n; ++v)
    if (coin(rng)) s.insert(v);
  return s;
}

// Chains partition the vertex set reached by the trace, consecutive pairs are
// recorded forces, and every chain starts at an initially black vertex.
void check_chains(const PropagationTrace& t) {
  VertexSet covered;
  std::size_t total = 0;
  for (const auto& chain : forcing_chains(t)) {
    REQUIRE_FALSE(chain.empty());
    CHECK(t.initial_black().contains(chain.front()));
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      const bool recorded = std::any_of(t.steps.begin(), t.steps.end(), [&](const ForceStep& s) {
        return s.forcer == chain[i] && s.forced == chain[i + 1];
      });
      CHECK(recorded);
    }
    for (Vertex v : chain) covered.insert(v);
    total += chain.size();
  }
  CHECK(total == covered.count());
  CHECK(covered == t.final);
}

}  // namespace

TEST_SUITE("forcing") {
  TEST_CASE("closure examples") {
    const auto p4 = zero_forcing_closure(fam(FamilySpec::path(4)), {0});
    CHECK(p4.complete());
    CHECK(p4.steps == std::vector<ForceStep>{{0, 1, 1}, {1, 2, 2}, {2, 3, 3}});
    CHECK_FALSE(p4.dominated.has_value());
    const auto k4 = zero_forcing_closure(fam(FamilySpec::complete(4)), {0, 1});
    CHECK(k4.final == VertexSet{0, 1});
    CHECK(k4.steps.empty());
    const Graph c5 = fam(FamilySpec::cycle(5));
    const auto c = zero_forcing_closure(c5, {0, 1});
    CHECK(c.complete());
    CHECK(oracle::all_true(oracle::closure(oracle::to_matrix(c5), as_bools({0, 1}, 5))));
  }

  TEST_CASE("zero forcing set examples") {
    CHECK(is_zero_forcing_set(fam(FamilySpec::path(9)), {0}));
    CHECK_FALSE(is_zero_forcing_set(fam(FamilySpec::cycle(6)), {0}));
    const Graph k5 = fam(FamilySpec::complete(5));
    CHECK(is_zero_forcing_set(k5, k5.vertices()));
  }

  TEST_CASE("monitoring examples") {
    CHECK(monitored_trace(fam(FamilySpec::cycle(6)), {0}).complete());
    const auto h = monitored_trace(fam(FamilySpec::h_graph()), {1});
    CHECK(h.final == VertexSet{0, 1, 2, 4});
    CHECK(*h.dominated == VertexSet{0, 1, 2, 4});
    CHECK_FALSE(h.complete());
    const auto k33 = monitored_trace(fam(FamilySpec::bipartite(3, 3)), {0});
    CHECK(k33.final == VertexSet{0, 3, 4, 5});
    CHECK(is_power_dominating_set(fam(FamilySpec::wheel(8)), {0}));
    CHECK_FALSE(is_power_dominating_set(fam(FamilySpec::path(5)), {}));
    // mu(C_5): v_1 = 0 and apex w = 10.
    CHECK(is_power_dominating_set(mycielskian(fam(FamilySpec::cycle(5))), {0, 10}));
  }

  TEST_CASE("chain examples") {
    const auto p4 = forcing_chains(zero_forcing_closure(fam(FamilySpec::path(4)), {0}));
    CHECK(p4 == std::vector<std::vector<Vertex>>{{0, 1, 2, 3}});
    const auto k3 = forcing_chains(zero_forcing_closure(fam(FamilySpec::complete(3)), {0, 1}));
    CHECK(k3 == std::vector<std::vector<Vertex>>{{0, 2}, {1}});
    const auto c5 = zero_forcing_closure(fam(FamilySpec::cycle(5)), {0, 1});
    CHECK(forcing_chains(c5).size() == 2);
    check_chains(c5);
  }

  TEST_CASE("monitored sequence is increasing and ends at the closure") {
    const auto t = monitored_trace(middle(fam(FamilySpec::path(7))), {1, 10});
    const auto seq = t.monitored_sequence();
    REQUIRE(seq.size() == t.rounds() + 1);
    CHECK(seq.front() == *t.dominated);
    for (std::size_t i = 1; i < seq.size(); ++i) {
      CHECK(seq[i - 1].is_subset_of(seq[i]));
      CHECK(seq[i - 1] != seq[i]);
    }
    CHECK(seq.back() == t.final);
  }

  TEST_CASE("closure laws on random graphs") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 300; ++i) {
      const std::size_t n = 1 + i % 24;
      const Graph g = random_graph(rng, n, 0.05 + 0.4 * (i % 7) / 6.0);
      const auto m = oracle::to_matrix(g);
      const VertexSet u = random_subset(rng, n, 0.25);
      VertexSet w = u;
      for (Vertex v : random_subset(rng, n, 0.2)) w.insert(v);
      const auto cu = zero_forcing_closure(g, u);
      CHECK(u.is_subset_of(cu.final));
      CHECK(cu.final.is_subset_of(zero_forcing_closure(g, w).final));
      CHECK(zero_forcing_closure(g, cu.final).final == cu.final);
      for (int k = 0; k < 3; ++k) CHECK(as_bools(cu.final, n) == oracle::closure_random_order(m, as_bools(u, n), rng));
      CHECK(is_power_dominating_set(g, u) == is_zero_forcing_set(g, closed_neighborhood(g, u)));
      CHECK(is_power_dominating_set(g, u) == oracle::is_pd(m, as_bools(u, n)));
      check_chains(cu);
      check_chains(monitored_trace(g, u));
      if (n <= 64) {
        std::uint64_t mask = 0;
        for (Vertex v : u) mask |= std::uint64_t{1} << v;
        CHECK(closure_mask(adjacency_masks(g), mask) == cu.final.word(0));
      }
    }
  }

  TEST_CASE("steps respect the color-change rule") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 100; ++i) {
      const Graph g = random_connected_graph(rng, 3 + i % 20, 0.15);
      const auto t = monitored_trace(g, random_subset(rng, g.order(), 0.15));
      VertexSet black = t.initial_black();
      std::size_t round = 0;
      VertexSet snapshot = black;
      for (const auto& s : t.steps) {
        if (s.round != round) {
          snapshot = black;
          round = s.round;
        }
        CHECK(snapshot.contains(s.forcer));
        CHECK((g.neighbors(s.forcer) - snapshot) == VertexSet{s.forced});
        black.insert(s.forced);
      }
      CHECK(black == t.final);
    }
  }
}
