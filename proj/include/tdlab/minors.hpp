#pragma once

#include "tdlab/graph.hpp"

#include <compare>
#include <string>

namespace tdlab {

/// One-step minor move.  For DeleteVertex only `u` is meaningful.
struct MinorStep
{
  enum class Kind { DeleteEdge, ContractEdge, DeleteVertex };

  Kind kind = Kind::DeleteEdge;
  int u = 0;
  int v = -1;

  static auto delete_edge(int u, int v) -> MinorStep { return {Kind::DeleteEdge, u, v}; }
  static auto contract_edge(int u, int v) -> MinorStep { return {Kind::ContractEdge, u, v}; }
  static auto delete_vertex(int x) -> MinorStep { return {Kind::DeleteVertex, x, -1}; }

  auto operator<=>(const MinorStep &) const = default;
};

auto to_string(MinorStep::Kind kind) -> std::string;
auto to_string(const MinorStep &step) -> std::string;

// Deleting vertex x renumbers every vertex above x down by one.  Contracting
// uv keeps the merged vertex at min(u, v) and removes max(u, v) the same way;
// loops and parallel edges vanish, so results stay simple.  All throw
// std::invalid_argument on missing vertices or edges.

auto delete_edge(const Graph &g, int u, int v) -> Graph;
auto delete_vertex(const Graph &g, int x) -> Graph;
auto contract_edge(const Graph &g, int u, int v) -> Graph;
auto apply(const Graph &g, const MinorStep &step) -> Graph;

/// New index of `x` after `step`, or -1 if it disappears.  A contracted pair maps to min(u, v).
auto renumber(const MinorStep &step, int x) -> int;

/// Removes v and makes its former neighbourhood a clique.
auto star_clique(const Graph &g, int v) -> Graph;

/// Edge deletions and contractions for every edge, plus deletion of isolated vertices, in sorted order.
auto one_step_minors(const Graph &g) -> std::vector<MinorStep>;

} // namespace tdlab
