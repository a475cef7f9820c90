#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "pdlab/graph.hpp"

namespace pdlab {

enum class Invariant {
  power_domination,  // gamma_p
  zero_forcing,      // Z
  domination,        // gamma
  edge_domination,   // gamma'
  path_cover,        // P
  spider,            // sp (trees only)
};

std::string invariant_name(Invariant inv);

// Per-invariant order caps.
inline constexpr std::size_t kMaxPowerDominationOrder = 40;
inline constexpr std::size_t kMaxDominationOrder = 40;
inline constexpr std::size_t kMaxZeroForcingOrder = 24;
inline constexpr std::size_t kMaxEdgeDominationSize = 28;
inline constexpr std::size_t kMaxPartitionOrder = 14;

using VertexWitness = std::vector<Vertex>;
using EdgeWitness = std::vector<Edge>;
using PartitionWitness = std::vector<std::vector<Vertex>>;

struct InvariantResult {
  std::size_t value = 0;
  /// Lexicographically least minimum solution (subset searches) or the
  /// partition found by the deterministic partition search.
  std::variant<VertexWitness, EdgeWitness, PartitionWitness> witness;
  /// Candidates examined in enumeration order up to and including the
  /// witness; independent of the worker count.
  std::uint64_t tested = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct SolverOptions {
  unsigned threads = 1;
  /// Skip vertices whose closed neighborhood is contained in another's
  /// (gamma and gamma_p only). Values are unchanged; witnesses are the least
  /// ones among non-dominated vertices.
  bool prune_dominated = false;
};

InvariantResult gamma_p(const Graph& g, const SolverOptions& opts = {});
InvariantResult zero_forcing_number(const Graph& g, const SolverOptions& opts = {});
InvariantResult domination_number(const Graph& g, const SolverOptions& opts = {});
InvariantResult edge_domination_number(const Graph& g, const SolverOptions& opts = {});
InvariantResult path_cover_number(const Graph& g, const SolverOptions& opts = {});
InvariantResult spider_number(const Graph& t, const SolverOptions& opts = {});

InvariantResult compute_invariant(Invariant inv, const Graph& g, const SolverOptions& opts = {});

/// Tree with at most one vertex of degree >= 3 (paths and K_1 included).
bool is_spider(const Graph& t);

/// Edge set F dominates when every edge is in F or shares an endpoint with
/// an edge of F.
bool is_edge_dominating_set(const Graph& g, const std::vector<Edge>& f);
bool is_dominating_set(const Graph& g, const VertexSet& d);

/// Renders a witness: "0,2,5" for vertices, "0-1,2-3" for edges, and
/// "0,1|2,3" for partitions.
std::string format_witness(const InvariantResult& r);

}  // namespace pdlab
