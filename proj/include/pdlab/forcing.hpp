#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pdlab/graph.hpp"

namespace pdlab {

struct ForceStep {
  Vertex forcer = 0;
  Vertex forced = 0;
  /// 1-based propagation round.
  std::size_t round = 0;

  friend bool operator==(const ForceStep&, const ForceStep&) = default;
};

/// Record of one propagation run.
///
/// Rounds are synchronous: round r applies every force that is valid against
/// the black set at the end of round r-1, in ascending forcer order; when two
/// forcers target the same vertex the smaller id wins. The black set after
/// round r is the monitored set S_{r+1} (S_1 being the initial black set).
struct PropagationTrace {
  VertexSet seed;
  /// N[seed] for power-domination runs; absent for zero forcing.
  std::optional<VertexSet> dominated;
  std::vector<ForceStep> steps;
  VertexSet final;
  std::size_t order = 0;

  [[nodiscard]] const VertexSet& initial_black() const { return dominated ? *dominated : seed; }
  [[nodiscard]] bool complete() const { return final.count() == order; }
  [[nodiscard]] std::size_t rounds() const { return steps.empty() ? 0 : steps.back().round; }
  /// S_1, S_2, ...: the initial black set followed by the set after each round.
  [[nodiscard]] std::vector<VertexSet> monitored_sequence() const;
};

/// cl(U) with the full chronological force list.
PropagationTrace zero_forcing_closure(const Graph& g, const VertexSet& u);
bool is_zero_forcing_set(const Graph& g, const VertexSet& u);

/// Domination step N[S] followed by the same propagation as the closure.
PropagationTrace monitored_trace(const Graph& g, const VertexSet& s);
bool is_power_dominating_set(const Graph& g, const VertexSet& s);

/// Maximal forcing chains, each starting at an initially black vertex
/// (singletons for black vertices that never force), ordered by that start.
std::vector<std::vector<Vertex>> forcing_chains(const PropagationTrace& trace);

/// Closure kernel over 64-bit rows for graphs of order <= 64. The result
/// equals zero_forcing_closure(...).final; no trace is recorded.
std::uint64_t closure_mask(std::span<const std::uint64_t> rows, std::uint64_t black);

/// Adjacency rows of g as 64-bit masks; requires order <= 64.
std::vector<std::uint64_t> adjacency_masks(const Graph& g);

}  // namespace pdlab
