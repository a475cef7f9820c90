#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "pdlab/forcing.hpp"
#include "pdlab/graph.hpp"

namespace pdlab {

/// graph6 small format only (n <= 62); the extended-size header is rejected.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

/// "n" on the first line, then one "u v" pair per line (0-based,
/// whitespace separated). Blank lines and '#' comments are ignored.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

/// Reads a file holding either an edge list or graph6 (first line used).
Graph read_graph_file(const std::string& path);

/// Evaluates a source expression:
///   SOURCE    := FAMILY | TRANSFORM '(' SOURCE ')' | 'prod(' SOURCE ',' SOURCE ')'
///              | 'g6:' LINE | 'file:' PATH
///   FAMILY    := 'path:N' | 'cycle:N' | 'complete:N' | 'star:N' | 'wheel:N'
///              | 'kpartite:N,N,...' | 'bipartite:N,N' | 'hgraph' | 'spider:N,N,...'
///   TRANSFORM := 'mu' | 'shadow' | 'central' | 'middle'
/// Throws ParseError with the byte offset of the problem.
Graph parse_source(std::string_view expr);

/// Undirected DOT. With a trace: seed vertices filled, dominated vertices
/// double-ringed, unmonitored vertices dashed, forces drawn as labeled arcs.
std::string emit_dot(const Graph& g, const PropagationTrace* trace = nullptr);

/// Human-readable multi-line trace listing.
std::string render_trace(const Graph& g, const PropagationTrace& trace);

/// Comma-separated vertex list, e.g. "0,2,5"; throws ParseError on junk.
VertexSet parse_vertex_list(std::string_view text);
std::string format_vertex_set(const VertexSet& s);

}  // namespace pdlab
