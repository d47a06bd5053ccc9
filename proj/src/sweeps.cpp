#include "tdlab/sweeps.hpp"

#include "tdlab/critical.hpp"
#include "tdlab/graph_io.hpp"
#include "tdlab/ranking.hpp"
#include "tdlab/solver.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>

namespace tdlab {

auto connected_labelled_graphs(int n) -> std::vector<Graph> {
  if (n < 1 || n > 7)
    throw std::invalid_argument("connected graph enumeration covers 1..7 vertices");
  std::vector<Edge> slots;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      slots.push_back({u, v});
  std::vector<Graph> out;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<VertexSet> rows(n);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((mask >> i) & 1U) {
        rows[slots[i].u].insert(slots[i].v);
        rows[slots[i].v].insert(slots[i].u);
      }
    auto g = Graph::from_adjacency(std::move(rows));
    if (is_connected(g))
      out.push_back(std::move(g));
  }
  return out;
}

auto random_graph(int n, double p, std::uint64_t seed) -> Graph {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (coin(rng))
        edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

namespace {

/// Runs `check` over 0..count-1; it returns an empty string on agreement.
auto run_sweep(std::size_t count, int threads, const std::function<std::string(std::size_t)> &check) -> SweepResult {
  std::vector<std::string> failures(count);
#pragma omp parallel for schedule(dynamic, 16) num_threads(std::max(threads, 1)) if (threads > 1)
  for (std::size_t i = 0; i < count; ++i)
    failures[i] = check(i);

  SweepResult result;
  result.checked = count;
  for (auto &f : failures) {
    if (f.empty())
      continue;
    if (result.disagreements++ == 0)
      result.first_failure = std::move(f);
  }
  return result;
}

auto describe(const Graph &g) -> std::string {
  return "graph6 " + write_graph6(g);
}

} // namespace

auto oracle_sweep(const std::vector<Graph> &graphs, int threads) -> SweepResult {
  return run_sweep(graphs.size(), threads, [&](std::size_t i) -> std::string {
    const auto &g = graphs[i];
    const auto cert = treedepth(g);
    const int oracle = brute_force_td(g);
    if (cert.value != oracle)
      return describe(g) + ": solver " + std::to_string(cert.value) + ", oracle " + std::to_string(oracle);
    if (!is_valid(verify_ranking(g, cert.witness)) || cert.witness.max_label() != cert.value)
      return describe(g) + ": certificate does not attain " + std::to_string(cert.value);
    return {};
  });
}

auto starclique_sweep(const std::vector<Graph> &graphs, int threads) -> SweepResult {
  std::size_t vertices = 0;
  for (const auto &g : graphs)
    vertices += g.order();
  auto result = run_sweep(graphs.size(), threads, [&](std::size_t i) -> std::string {
    const auto &g = graphs[i];
    if (g.order() < 2)
      return {};
    const int td = treedepth(g).value;
    for (int v = 0; v < g.order(); ++v) {
      const bool by_transform = treedepth(star_clique(g, v)).value < td;
      const bool by_search = one_unique_direct(g, v, td).has_value();
      if (by_transform != by_search)
        return describe(g) + " vertex " + std::to_string(v) + ": star-clique says " +
               (by_transform ? "1-unique" : "not 1-unique") + ", direct search disagrees";
    }
    return {};
  });
  result.checked = vertices;
  return result;
}

auto criterion_sweep(const std::vector<Graph> &graphs, int colors, int threads) -> SweepResult {
  std::size_t labellings = 0;
  for (const auto &g : graphs) {
    std::size_t per = 1;
    for (int i = 0; i < g.order(); ++i)
      per *= static_cast<std::size_t>(colors);
    labellings += per;
  }
  auto result = run_sweep(graphs.size(), threads, [&](std::size_t i) -> std::string {
    const auto &g = graphs[i];
    std::vector<int> labels(g.order(), 1);
    while (true) {
      const bool fast = is_valid(verify_ranking(g, Ranking(labels, colors)));
      if (fast != verify_ranking_by_paths(g, labels))
        return describe(g) + " labelling " + to_string(Ranking(labels, colors));
      int pos = 0;
      while (pos < g.order() && labels[pos] == colors)
        labels[pos++] = 1;
      if (pos == g.order())
        return {};
      ++labels[pos];
    }
  });
  result.checked = labellings;
  return result;
}

} // namespace tdlab
