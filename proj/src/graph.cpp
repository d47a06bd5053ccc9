#include "tdlab/graph.hpp"

#include <algorithm>

namespace tdlab {

namespace {

auto check_order(int n) -> void {
  if (n < 1 || n > Graph::max_vertices)
    throw std::invalid_argument("graph order " + std::to_string(n) + " outside 1..64");
}

} // namespace

Graph::Graph(int n) {
  check_order(n);
  _adj.assign(n, VertexSet{});
}

auto Graph::from_edges(int n, std::span<const Edge> edges) -> Graph {
  Graph g(n);
  for (const auto &e : edges) {
    if (!g.has_vertex(e.u) || !g.has_vertex(e.v))
      throw std::invalid_argument("edge " + to_string(e) + " names a vertex outside 0.." + std::to_string(n - 1));
    if (e.u == e.v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (g._adj[e.u].contains(e.v))
      throw std::invalid_argument("repeated edge " + to_string(e));
    g._adj[e.u].insert(e.v);
    g._adj[e.v].insert(e.u);
  }
  return g;
}

auto Graph::from_adjacency(std::vector<VertexSet> rows) -> Graph {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  const auto all = VertexSet::prefix(n);
  for (int v = 0; v < n; ++v) {
    if (!rows[v].subset_of(all))
      throw std::invalid_argument("neighbour of vertex " + std::to_string(v) + " out of range");
    if (rows[v].contains(v))
      throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
    for (int u : rows[v])
      if (!rows[u].contains(v))
        throw std::invalid_argument("asymmetric adjacency between " + std::to_string(v) + " and " + std::to_string(u));
  }
  Graph g(n);
  g._adj = std::move(rows);
  return g;
}

auto Graph::size() const -> int {
  int twice = 0;
  for (auto row : _adj)
    twice += row.size();
  return twice / 2;
}

auto Graph::edges() const -> std::vector<Edge> {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u)
    for (int v : _adj[u])
      if (u < v)
        out.push_back({u, v});
  return out;
}

auto Graph::degree_sequence() const -> std::vector<int> {
  std::vector<int> degrees;
  degrees.reserve(_adj.size());
  for (auto row : _adj)
    degrees.push_back(row.size());
  return degrees;
}

auto component_of(const Graph &g, VertexSet within, int start) -> VertexSet {
  VertexSet seen = VertexSet::single(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier)
      next |= g.neighbors(v);
    next = (next & within) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

auto components(const Graph &g, VertexSet within) -> std::vector<VertexSet> {
  std::vector<VertexSet> out;
  while (!within.empty()) {
    auto comp = component_of(g, within, within.first());
    out.push_back(comp);
    within -= comp;
  }
  return out;
}

auto components(const Graph &g) -> std::vector<VertexSet> {
  return components(g, g.vertices());
}

auto is_connected(const Graph &g) -> bool {
  return component_of(g, g.vertices(), 0) == g.vertices();
}

auto induced_subgraph(const Graph &g, VertexSet keep) -> Graph {
  std::vector<int> index(g.order(), -1);
  int next = 0;
  for (int v : keep)
    index[v] = next++;
  std::vector<VertexSet> rows(next);
  for (int v : keep)
    for (int u : g.neighbors(v) & keep)
      rows[index[v]].insert(index[u]);
  return Graph::from_adjacency(std::move(rows));
}

auto disjoint_union(const Graph &a, const Graph &b) -> Graph {
  const int shift = a.order();
  if (shift + b.order() > Graph::max_vertices)
    throw std::invalid_argument("disjoint union exceeds 64 vertices");
  std::vector<VertexSet> rows;
  for (int v = 0; v < a.order(); ++v)
    rows.push_back(a.neighbors(v));
  for (int v = 0; v < b.order(); ++v)
    rows.push_back(VertexSet(b.neighbors(v).bits() << shift));
  return Graph::from_adjacency(std::move(rows));
}

auto to_string(const Edge &e) -> std::string {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

} // namespace tdlab
