#include "tdlab/minors.hpp"

#include <algorithm>
#include <stdexcept>

namespace tdlab {

namespace {

auto require_vertex(const Graph &g, int x) -> void {
  if (!g.has_vertex(x))
    throw std::invalid_argument("vertex " + std::to_string(x) + " not in graph of order " + std::to_string(g.order()));
}

auto require_edge(const Graph &g, int u, int v) -> void {
  require_vertex(g, u);
  require_vertex(g, v);
  if (!g.adjacent(u, v))
    throw std::invalid_argument("no edge " + to_string(Edge{u, v}));
}

/// Drops bit x and shifts the higher bits down by one.
auto squeeze(VertexSet s, int x) -> VertexSet {
  const auto low = s.bits() & ((std::uint64_t{1} << x) - 1);
  const auto high = x == 63 ? 0 : (s.bits() >> (x + 1)) << x;
  return VertexSet(low | high);
}

auto rows_of(const Graph &g) -> std::vector<VertexSet> {
  std::vector<VertexSet> rows;
  rows.reserve(g.order());
  for (int v = 0; v < g.order(); ++v)
    rows.push_back(g.neighbors(v));
  return rows;
}

auto remove_row(std::vector<VertexSet> rows, int x) -> std::vector<VertexSet> {
  rows.erase(rows.begin() + x);
  for (auto &row : rows)
    row = squeeze(row, x);
  return rows;
}

} // namespace

auto to_string(MinorStep::Kind kind) -> std::string {
  switch (kind) {
  case MinorStep::Kind::DeleteEdge:
    return "delete_edge";
  case MinorStep::Kind::ContractEdge:
    return "contract_edge";
  case MinorStep::Kind::DeleteVertex:
    return "delete_vertex";
  }
  return "?";
}

auto to_string(const MinorStep &step) -> std::string {
  if (step.kind == MinorStep::Kind::DeleteVertex)
    return to_string(step.kind) + "(" + std::to_string(step.u) + ")";
  return to_string(step.kind) + "(" + std::to_string(step.u) + "," + std::to_string(step.v) + ")";
}

auto delete_edge(const Graph &g, int u, int v) -> Graph {
  require_edge(g, u, v);
  auto rows = rows_of(g);
  rows[u].erase(v);
  rows[v].erase(u);
  return Graph::from_adjacency(std::move(rows));
}

auto delete_vertex(const Graph &g, int x) -> Graph {
  require_vertex(g, x);
  if (g.order() == 1)
    throw std::invalid_argument("cannot delete the only vertex");
  auto rows = rows_of(g);
  for (auto &row : rows)
    row.erase(x);
  return Graph::from_adjacency(remove_row(std::move(rows), x));
}

auto contract_edge(const Graph &g, int u, int v) -> Graph {
  require_edge(g, u, v);
  const int keep = std::min(u, v);
  const int gone = std::max(u, v);
  auto rows = rows_of(g);
  const auto merged = (rows[keep] | rows[gone]).without(keep).without(gone);
  for (auto &row : rows)
    row.erase(gone);
  for (int x : merged)
    rows[x].insert(keep);
  rows[keep] = merged;
  return Graph::from_adjacency(remove_row(std::move(rows), gone));
}

auto apply(const Graph &g, const MinorStep &step) -> Graph {
  switch (step.kind) {
  case MinorStep::Kind::DeleteEdge:
    return delete_edge(g, step.u, step.v);
  case MinorStep::Kind::ContractEdge:
    return contract_edge(g, step.u, step.v);
  case MinorStep::Kind::DeleteVertex:
    return delete_vertex(g, step.u);
  }
  throw std::invalid_argument("unknown minor step");
}

auto renumber(const MinorStep &step, int x) -> int {
  switch (step.kind) {
  case MinorStep::Kind::DeleteEdge:
    return x;
  case MinorStep::Kind::DeleteVertex:
    return x == step.u ? -1 : (x > step.u ? x - 1 : x);
  case MinorStep::Kind::ContractEdge: {
    const int keep = std::min(step.u, step.v);
    const int gone = std::max(step.u, step.v);
    if (x == gone)
      return keep;
    return x > gone ? x - 1 : x;
  }
  }
  return -1;
}

auto star_clique(const Graph &g, int v) -> Graph {
  require_vertex(g, v);
  if (g.order() == 1)
    throw std::invalid_argument("star-clique transform of K_1 leaves no vertices");
  auto rows = rows_of(g);
  const auto hood = g.neighbors(v);
  for (int x : hood)
    rows[x] |= hood.without(x);
  for (auto &row : rows)
    row.erase(v);
  return Graph::from_adjacency(remove_row(std::move(rows), v));
}

auto one_step_minors(const Graph &g) -> std::vector<MinorStep> {
  std::vector<MinorStep> steps;
  for (const auto &e : g.edges()) {
    steps.push_back(MinorStep::delete_edge(e.u, e.v));
    steps.push_back(MinorStep::contract_edge(e.u, e.v));
  }
  if (g.order() > 1)
    for (int x = 0; x < g.order(); ++x)
      if (g.degree(x) == 0)
        steps.push_back(MinorStep::delete_vertex(x));
  std::sort(steps.begin(), steps.end());
  return steps;
}

} // namespace tdlab
