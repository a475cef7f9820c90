#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pdlab/graph.hpp"

namespace pdlab {

/// Largest order the permutation-minimizing canonical form accepts.
inline constexpr std::size_t kMaxCanonicalOrder = 8;
/// Largest order the connected-graph census supports.
inline constexpr std::size_t kMaxCensusOrder = 7;

/// Upper-triangle adjacency bits in graph6 column order, (0,1) most
/// significant. n <= kMaxCanonicalOrder.
std::uint64_t adjacency_code(const Graph& g);
Graph graph_from_code(std::size_t n, std::uint64_t code);

/// Minimum adjacency_code over all n! relabelings.
std::uint64_t canonical_code(const Graph& g);
/// The relabeling of g that realizes canonical_code.
Graph canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

/// One canonical representative per isomorphism class of connected graphs on
/// n vertices, sorted by canonical code. 1 <= n <= kMaxCensusOrder. Results
/// are computed once per process and shared.
const std::vector<Graph>& enumerate_connected_graphs(std::size_t n);

/// Every connected class of order lo..hi, concatenated by order.
std::vector<Graph> connected_census(std::size_t lo, std::size_t hi);

// Seeded random generators used by the scans and property tests.

/// G(n, p) conditioned on connectivity: a random spanning tree plus
/// independent extra edges with probability p.
Graph random_connected_graph(std::mt19937_64& rng, std::size_t n, double p);
/// Uniform labeled tree via a random Pruefer sequence.
Graph random_tree(std::mt19937_64& rng, std::size_t n);
Graph random_graph(std::mt19937_64& rng, std::size_t n, double p);
/// Random simple cubic graph via the pairing model with rejection; n even.
Graph random_cubic_graph(std::mt19937_64& rng, std::size_t n);

}  // namespace pdlab
