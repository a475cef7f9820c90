#pragma once

#include <string>
#include <vector>

#include "pdlab/graph.hpp"

namespace pdlab {

enum class FamilyKind {
  path,
  cycle,
  complete,
  star,
  complete_bipartite,
  complete_multipartite,
  wheel,
  h_graph,
  spider,
};

/// A named family member. Every family uses the order-n convention: `star`
/// with n is K_{1,n-1} and `wheel` with n is a hub joined to C_{n-1}.
///
/// Vertex layout per family:
///   path, cycle        0..n-1 along the path/cycle
///   complete           0..n-1
///   star               center 0, leaves 1..n-1
///   *partite           parts are consecutive id blocks, smallest part first
///   wheel              hub 0, rim 1..n-1 in cyclic order
///   h_graph            0-1-2 and 3-4-5 joined by 1-4
///   spider             center 0, then each leg outward in the given order
struct FamilySpec {
  FamilyKind kind = FamilyKind::path;
  std::vector<std::size_t> params;

  static FamilySpec path(std::size_t n) { return {FamilyKind::path, {n}}; }
  static FamilySpec cycle(std::size_t n) { return {FamilyKind::cycle, {n}}; }
  static FamilySpec complete(std::size_t n) { return {FamilyKind::complete, {n}}; }
  static FamilySpec star(std::size_t n) { return {FamilyKind::star, {n}}; }
  static FamilySpec wheel(std::size_t n) { return {FamilyKind::wheel, {n}}; }
  static FamilySpec bipartite(std::size_t a, std::size_t b) {
    return {FamilyKind::complete_bipartite, {a, b}};
  }
  static FamilySpec multipartite(std::vector<std::size_t> parts) {
    return {FamilyKind::complete_multipartite, std::move(parts)};
  }
  static FamilySpec h_graph() { return {FamilyKind::h_graph, {}}; }
  static FamilySpec spider(std::vector<std::size_t> legs) {
    return {FamilyKind::spider, std::move(legs)};
  }
};

/// Validates and builds; part sizes are sorted ascending before layout.
Graph make_family(FamilySpec spec);

/// Family name as used in source expressions ("kpartite", "hgraph", ...).
std::string family_name(FamilyKind kind);

enum class TransformKind { mycielskian, shadow, central, middle, cartesian_product };

/// mu(G): originals 0..n-1, shadows u_i = n+i, apex w = 2n.
/// Order 2n+1, size 3m+n.
Graph mycielskian(const Graph& g);

/// S(G): originals 0..n-1, shadow u_i = n+i joined to N(v_i).
/// Order 2n, size 3m.
Graph shadow(const Graph& g);

/// C(G): every edge subdivided once and every non-adjacent pair joined.
/// Subdivision vertices follow the originals in sorted edge order.
/// Order n+m, size C(n,2)+m.
Graph central(const Graph& g);

/// M(G): vertices V and E; edge-vertices adjacent when the edges share an
/// endpoint, vertex-edge adjacent on incidence. Edge-vertices follow the
/// originals in sorted edge order. Order n+m, size 2m + sum C(deg v, 2).
Graph middle(const Graph& g);

/// a box b; vertex (x, y) has id x * |b| + y.
Graph cartesian_product(const Graph& a, const Graph& b);

Graph apply_transform(TransformKind kind, const Graph& g);

}  // namespace pdlab
