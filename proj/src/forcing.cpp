#include "pdlab/forcing.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "pdlab/error.hpp"

namespace pdlab {

namespace {

void require_within(const Graph& g, const VertexSet& s) {
  if (!s.is_subset_of(g.vertices()))
    throw Error(ErrorCode::invalid_argument, "vertex set is not contained in V(G)");
}

void propagate(const Graph& g, PropagationTrace& trace) {
  VertexSet black = trace.initial_black();
  for (std::size_t round = 1;; ++round) {
    VertexSet claimed;
    const std::size_t before = trace.steps.size();
    for (Vertex v : black) {
      const VertexSet white = g.neighbors(v) - black;
      if (white.count() != 1) continue;
      const Vertex target = white.first();
      if (claimed.contains(target)) continue;
      claimed.insert(target);
      trace.steps.push_back({v, target, round});
    }
    if (trace.steps.size() == before) break;
    black |= claimed;
  }
  trace.final = black;
}

}  // namespace

std::vector<VertexSet> PropagationTrace::monitored_sequence() const {
  std::vector<VertexSet> seq{initial_black()};
  std::size_t i = 0;
  for (std::size_t r = 1; r <= rounds(); ++r) {
    VertexSet next = seq.back();
    for (; i < steps.size() && steps[i].round == r; ++i) next.insert(steps[i].forced);
    seq.push_back(next);
  }
  return seq;
}

PropagationTrace zero_forcing_closure(const Graph& g, const VertexSet& u) {
  require_within(g, u);
  PropagationTrace trace;
  trace.seed = u;
  trace.order = g.order();
  propagate(g, trace);
  return trace;
}

bool is_zero_forcing_set(const Graph& g, const VertexSet& u) {
  return zero_forcing_closure(g, u).complete();
}

PropagationTrace monitored_trace(const Graph& g, const VertexSet& s) {
  require_within(g, s);
  PropagationTrace trace;
  trace.seed = s;
  trace.dominated = closed_neighborhood(g, s);
  trace.order = g.order();
  propagate(g, trace);
  return trace;
}

bool is_power_dominating_set(const Graph& g, const VertexSet& s) {
  return monitored_trace(g, s).complete();
}

std::vector<std::vector<Vertex>> forcing_chains(const PropagationTrace& trace) {
  std::map<Vertex, Vertex> next;
  for (const ForceStep& step : trace.steps) next.emplace(step.forcer, step.forced);
  std::vector<std::vector<Vertex>> chains;
  for (Vertex start : trace.initial_black()) {
    std::vector<Vertex> chain{start};
    for (auto it = next.find(start); it != next.end(); it = next.find(it->second))
      chain.push_back(it->second);
    chains.push_back(std::move(chain));
  }
  return chains;
}

std::uint64_t closure_mask(std::span<const std::uint64_t> rows, std::uint64_t black) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::uint64_t it = black; it != 0; it &= it - 1) {
      const std::uint64_t white = rows[static_cast<std::size_t>(std::countr_zero(it))] & ~black;
      if (white != 0 && (white & (white - 1)) == 0) {
        black |= white;
        changed = true;
      }
    }
  }
  return black;
}

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  if (g.order() > 64)
    throw Error(ErrorCode::cap_exceeded, "64-bit kernels need order <= 64");
  std::vector<std::uint64_t> rows(g.order());
  for (Vertex v = 0; v < g.order(); ++v) rows[v] = g.neighbors(v).word(0);
  return rows;
}

}  // namespace pdlab
