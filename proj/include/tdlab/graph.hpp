#pragma once

#include "tdlab/vertex_set.hpp"

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tdlab {

struct Edge
{
  int u = 0;
  int v = 0;

  auto operator<=>(const Edge &) const = default;
};

/**
 * Immutable simple undirected graph on 1..64 vertices.
 *
 * Each row of the adjacency is a single-word bit set. Construction validates
 * symmetry, irreflexivity and that no neighbour bit lies at or above n; after
 * that the value never changes, so a Graph can be shared freely across threads.
 */
class Graph
{
public:
  static constexpr int max_vertices = 64;

  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Throws std::invalid_argument on out-of-range endpoints, loops or repeated edges.
  static auto from_edges(int n, std::span<const Edge> edges) -> Graph;
  static auto from_edges(int n, std::initializer_list<Edge> edges) -> Graph {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  /// Throws std::invalid_argument when the rows violate a graph invariant.
  static auto from_adjacency(std::vector<VertexSet> rows) -> Graph;

  auto order() const -> int { return static_cast<int>(_adj.size()); }
  auto size() const -> int;
  auto vertices() const -> VertexSet { return VertexSet::prefix(order()); }
  auto neighbors(int v) const -> VertexSet { return _adj[v]; }
  auto degree(int v) const -> int { return _adj[v].size(); }
  auto adjacent(int u, int v) const -> bool { return _adj[u].contains(v); }
  auto has_vertex(int v) const -> bool { return v >= 0 && v < order(); }

  /// Edges with u < v, sorted lexicographically.
  auto edges() const -> std::vector<Edge>;
  auto degree_sequence() const -> std::vector<int>;

  auto operator==(const Graph &) const -> bool = default;

private:
  std::vector<VertexSet> _adj;
};

/// Connected components of the subgraph induced on `within`, ordered by lowest vertex.
auto components(const Graph &g, VertexSet within) -> std::vector<VertexSet>;
auto components(const Graph &g) -> std::vector<VertexSet>;
auto is_connected(const Graph &g) -> bool;

/// Vertices of `within` reachable from `start` inside `within`.
auto component_of(const Graph &g, VertexSet within, int start) -> VertexSet;

/// Induced subgraph on `keep`, vertices renumbered in ascending order.
auto induced_subgraph(const Graph &g, VertexSet keep) -> Graph;

/// Disjoint union; vertices of `b` are shifted up by a.order().
auto disjoint_union(const Graph &a, const Graph &b) -> Graph;

auto to_string(const Edge &e) -> std::string;

} // namespace tdlab
