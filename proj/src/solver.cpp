#include "tdlab/solver.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tdlab {

namespace {

/// Degeneracy of the subgraph induced on s.
auto degeneracy(const Graph &g, VertexSet s) -> int {
  int best = 0;
  while (!s.empty()) {
    int pick = -1;
    int low = 65;
    for (int v : s) {
      const int d = (g.neighbors(v) & s).size();
      if (d < low) {
        low = d;
        pick = v;
      }
    }
    best = std::max(best, low);
    s.erase(pick);
  }
  return best;
}

auto ceil_log2(int x) -> int {
  return x <= 1 ? 0 : std::bit_width(static_cast<unsigned>(x - 1));
}

class ExactClique
{
public:
  explicit ExactClique(const Graph &g) : _g(g) {}

  auto run() -> int {
    expand(VertexSet{}, _g.vertices());
    return _best;
  }

private:
  auto expand(VertexSet clique, VertexSet candidates) -> void {
    if (candidates.empty()) {
      _best = std::max(_best, clique.size());
      return;
    }
    while (!candidates.empty()) {
      if (clique.size() + candidates.size() <= _best)
        return;
      const int v = candidates.first();
      expand(clique.with(v), candidates & _g.neighbors(v));
      candidates.erase(v);
    }
  }

  const Graph &_g;
  int _best = 0;
};

} // namespace

TreedepthSolver::TreedepthSolver(const Graph &g, SolverConfig config)
    : _graph(g), _config(config), _memo(config.memo_capacity), _start(std::chrono::steady_clock::now()) {}

auto TreedepthSolver::elapsed_ms() const -> double {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - _start).count();
}

auto TreedepthSolver::stats() const -> SolverStats {
  return {_nodes.load(), _memo.size(), elapsed_ms()};
}

auto TreedepthSolver::count_node() -> void {
  const auto n = _nodes.fetch_add(1, std::memory_order_relaxed) + 1;
  if (!_budget_enforced)
    return;
  if (_config.node_budget > 0 && n > _config.node_budget)
    throw BudgetExhausted({}, stats());
  if (_config.time_budget_seconds > 0 && (n & 255) == 0 && elapsed_ms() > 1000.0 * _config.time_budget_seconds)
    throw BudgetExhausted({}, stats());
}

auto TreedepthSolver::quick_lower(VertexSet s) -> int {
  if (auto hit = _memo.find(s))
    return hit->lower;
  const int lower = degeneracy(_graph, s) + 1;
  return _memo.tighten(s, lower, s.size()).lower;
}

auto TreedepthSolver::candidates(VertexSet s) const -> std::vector<Candidate> {
  std::vector<Candidate> order;
  order.reserve(s.size());
  for (int v : s)
    order.push_back({v, (_graph.neighbors(v) & s).size()});
  std::stable_sort(order.begin(), order.end(), [](const Candidate &a, const Candidate &b) { return a.degree > b.degree; });
  return order;
}

auto TreedepthSolver::branch_succeeds(VertexSet s, int v, int k) -> bool {
  auto parts = components(_graph, s.without(v));
  for (auto part : parts)
    if (quick_lower(part) > k - 1)
      return false;
  std::sort(parts.begin(), parts.end(), [](VertexSet a, VertexSet b) {
    return a.size() != b.size() ? a.size() > b.size() : a.bits() < b.bits();
  });
  for (auto part : parts)
    if (!decide(part, k - 1, false))
      return false;
  return true;
}

auto TreedepthSolver::decide(VertexSet s, int k, bool top) -> bool {
  const int size = s.size();
  if (size <= k)
    return true;
  if (k <= 1)
    return false;
  if (auto hit = _memo.find(s)) {
    if (hit->lower > k)
      return false;
    if (hit->upper <= k)
      return true;
  }
  if (quick_lower(s) > k)
    return false;
  count_node();

  const auto order = candidates(s);
  bool found = false;

#ifdef _OPENMP
  if (top && _config.threads > 1) {
    std::atomic<bool> hit{false};
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) num_threads(_config.threads)
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (hit.load(std::memory_order_relaxed))
        continue;
      try {
        if (branch_succeeds(s, order[i].vertex, k))
          hit.store(true, std::memory_order_relaxed);
      } catch (...) {
#pragma omp critical(tdlab_solver_failure)
        if (!failure)
          failure = std::current_exception();
        hit.store(true, std::memory_order_relaxed);
      }
    }
    if (failure)
      std::rethrow_exception(failure);
    found = hit.load();
  } else
#endif
  {
    (void)top;
    for (const auto &c : order)
      if (branch_succeeds(s, c.vertex, k)) {
        found = true;
        break;
      }
  }

  if (found)
    _memo.tighten(s, 0, k);
  else
    _memo.tighten(s, k + 1, 64);
  return found;
}

auto TreedepthSolver::solve_connected(VertexSet s) -> int {
  const int upper = dfs_depth(_graph, s);
  int k = std::max(quick_lower(s), 1);
  for (; k < upper; ++k)
    if (decide(s, k, true))
      return k;
  _memo.tighten(s, upper, upper);
  return upper;
}

auto TreedepthSolver::assign_witness(VertexSet s, int rank, std::vector<int> &labels) -> void {
  if (s.size() == 1) {
    labels[s.first()] = rank;
    return;
  }
  for (const auto &c : candidates(s)) {
    const auto rest = s.without(c.vertex);
    const auto parts = components(_graph, rest);
    if (std::all_of(parts.begin(), parts.end(), [&](VertexSet p) { return decide(p, rank - 1, false); })) {
      labels[c.vertex] = rank;
      for (auto part : parts)
        assign_witness(part, rank - 1, labels);
      return;
    }
  }
  throw std::logic_error("witness reconstruction found no feasible branch");
}

auto TreedepthSolver::solve() -> TdCertificate {
  const auto parts = components(_graph);
  std::vector<int> values(parts.size(), 0);
  std::size_t i = 0;
  try {
    for (; i < parts.size(); ++i)
      values[i] = solve_connected(parts[i]);
  } catch (const BudgetExhausted &) {
    auto cheap = bounds(_graph);
    Bounds proven{cheap.lower, 0};
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (j < i) {
        proven.lower = std::max(proven.lower, values[j]);
        proven.upper = std::max(proven.upper, values[j]);
        continue;
      }
      const auto entry = _memo.find(parts[j]);
      const int lower = entry ? entry->lower : 1;
      const int upper = std::min(entry ? int{entry->upper} : 64, dfs_depth(_graph, parts[j]));
      proven.lower = std::max(proven.lower, lower);
      proven.upper = std::max(proven.upper, upper);
    }
    proven.upper = std::min(proven.upper, cheap.upper);
    throw BudgetExhausted(proven, stats());
  }

  const int value = *std::max_element(values.begin(), values.end());
  _budget_enforced = false;
  std::vector<int> labels(_graph.order(), 0);
  for (auto part : parts)
    assign_witness(part, value, labels);
  _budget_enforced = true;
  return {value, Ranking(std::move(labels), value), stats()};
}

auto TreedepthSolver::at_most(int k) -> bool {
  if (k < 0)
    throw std::invalid_argument("treedepth_le needs k >= 0");
  try {
    for (auto part : components(_graph))
      if (!decide(part, k, true))
        return false;
    return true;
  } catch (const BudgetExhausted &) {
    throw BudgetExhausted(bounds(_graph), stats());
  }
}

auto treedepth(const Graph &g, SolverConfig config) -> TdCertificate {
  TreedepthSolver solver(g, config);
  return solver.solve();
}

auto treedepth_le(const Graph &g, int k, SolverConfig config) -> bool {
  TreedepthSolver solver(g, config);
  return solver.at_most(k);
}

auto dfs_depth(const Graph &g, VertexSet within) -> int {
  int deepest = 0;
  VertexSet seen;
  std::function<void(int, int)> visit = [&](int x, int depth) {
    seen.insert(x);
    deepest = std::max(deepest, depth);
    for (int y : g.neighbors(x) & within)
      if (!seen.contains(y))
        visit(y, depth + 1);
  };
  for (int root : within)
    if (!seen.contains(root))
      visit(root, 1);
  return deepest;
}

auto clique_lower_bound(const Graph &g) -> int {
  if (g.order() <= 40)
    return ExactClique(g).run();
  int best = 1;
  for (int start = 0; start < g.order(); ++start) {
    VertexSet clique = VertexSet::single(start);
    VertexSet pool = g.neighbors(start);
    while (!pool.empty()) {
      const int v = pool.first();
      clique.insert(v);
      pool &= g.neighbors(v);
    }
    best = std::max(best, clique.size());
  }
  return best;
}

auto bounds(const Graph &g) -> Bounds {
  const int depth = dfs_depth(g, g.vertices());
  // A DFS root-to-leaf chain with L edges is a path, whose tree-depth is ceil(log2(L + 2)).
  const int path_bound = ceil_log2(depth + 1);
  return {std::max(clique_lower_bound(g), path_bound), depth};
}

namespace {

class BruteForce
{
public:
  BruteForce(const Graph &g, int colors) : _g(g), _colors(colors), _labels(g.order(), 0) {}

  auto exists(int x = 0) -> bool {
    if (x == _g.order())
      return verify_ranking_by_paths(_g, _labels);
    for (int label = 1; label <= _colors; ++label) {
      // Adjacent equal labels already fail: the edge is the path.
      bool clash = false;
      for (int y : _g.neighbors(x))
        if (y < x && _labels[y] == label) {
          clash = true;
          break;
        }
      if (clash)
        continue;
      _labels[x] = label;
      if (exists(x + 1))
        return true;
    }
    _labels[x] = 0;
    return false;
  }

private:
  const Graph &_g;
  int _colors;
  std::vector<int> _labels;
};

} // namespace

auto brute_force_td(const Graph &g) -> int {
  if (g.order() > brute_force_vertex_cap)
    throw std::invalid_argument("brute_force_td limited to " + std::to_string(brute_force_vertex_cap) + " vertices");
  for (int k = 1;; ++k)
    if (BruteForce(g, k).exists())
      return k;
}

} // namespace tdlab
