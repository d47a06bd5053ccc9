#include "tdlab/generators.hpp"

#include <string>

namespace tdlab {

namespace {

auto require_range(const char *family, int value, int lo, int hi) -> void {
  if (value < lo || value > hi)
    throw std::invalid_argument(std::string(family) + " parameter " + std::to_string(value) + " outside " +
                                std::to_string(lo) + ".." + std::to_string(hi));
}

auto add_clique(std::vector<Edge> &edges, int first, int count) -> void {
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j)
      edges.push_back({first + i, first + j});
}

} // namespace

auto complete(int k) -> Graph {
  require_range("complete", k, 1, 64);
  std::vector<Edge> edges;
  add_clique(edges, 0, k);
  return Graph::from_edges(k, edges);
}

auto path(int n) -> Graph {
  require_range("path", n, 1, 64);
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i)
    edges.push_back({i, i + 1});
  return Graph::from_edges(n, edges);
}

auto cycle(int n) -> Graph {
  require_range("cycle", n, 3, 64);
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i)
    edges.push_back({i, i + 1});
  edges.push_back({0, n - 1});
  return Graph::from_edges(n, edges);
}

auto k_net(int k) -> Graph {
  require_range("k_net", k, 1, 32);
  std::vector<Edge> edges;
  add_clique(edges, 0, k);
  for (int i = 0; i < k; ++i)
    edges.push_back({i, k + i});
  return Graph::from_edges(2 * k, edges);
}

auto cartesian_k2(int a) -> Graph {
  require_range("cartesian_k2", a, 1, 32);
  std::vector<Edge> edges;
  add_clique(edges, 0, a);
  add_clique(edges, a, a);
  for (int i = 0; i < a; ++i)
    edges.push_back({i, a + i});
  return Graph::from_edges(2 * a, edges);
}

auto hn_layout(int n) -> HnLayout {
  require_range("h_n", n, 3, 32);
  HnLayout layout;
  layout.n = n;
  layout.hub = 0;
  for (int i = 1; i <= n - 1; ++i) {
    layout.clique.push_back(i);
    layout.subdivision.push_back(n - 1 + i);
  }
  return layout;
}

auto h_n(int n) -> HnGraph {
  auto layout = hn_layout(n);
  std::vector<Edge> edges;
  add_clique(edges, 1, n - 1);
  for (std::size_t i = 0; i < layout.clique.size(); ++i) {
    edges.push_back({layout.clique[i], layout.subdivision[i]});
    edges.push_back({layout.hub, layout.subdivision[i]});
  }
  return {Graph::from_edges(2 * n - 1, edges), std::move(layout)};
}

} // namespace tdlab
