#pragma once

#include "tdlab/graph.hpp"
#include "tdlab/memo.hpp"
#include "tdlab/ranking.hpp"

#include <atomic>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace tdlab {

struct SolverConfig
{
  std::uint64_t node_budget = 0; ///< 0 = unlimited
  double time_budget_seconds = 0; ///< 0 = unlimited
  int threads = 1;                ///< 1 runs the serial search
  std::size_t memo_capacity = std::size_t{1} << 24;
};

struct SolverStats
{
  std::uint64_t nodes = 0;
  std::size_t memo_entries = 0;
  double elapsed_ms = 0;
};

/// lower <= td(G) <= upper.
struct Bounds
{
  int lower = 1;
  int upper = 64;
};

struct TdCertificate
{
  int value = 0;
  Ranking witness;
  SolverStats stats;
};

/// Thrown when the node or time budget runs out; carries what was proven so far.
class BudgetExhausted : public std::runtime_error
{
public:
  BudgetExhausted(Bounds bounds, SolverStats stats)
      : std::runtime_error("solver budget exhausted; tree-depth in [" + std::to_string(bounds.lower) + ", " +
                           std::to_string(bounds.upper) + "]"),
        _bounds(bounds), _stats(stats) {}

  auto bounds() const -> Bounds { return _bounds; }
  auto stats() const -> SolverStats { return _stats; }

private:
  Bounds _bounds;
  SolverStats _stats;
};

/**
 * Exact tree-depth by branch and bound over connected vertex subsets.
 *
 * td(K_1) = 1, td of a disconnected graph is the maximum over its components,
 * and td(S) = 1 + min_v td(S - v) for connected S.  The search answers the
 * decision question td(S) <= k, memoising a proven interval per subset.
 * Branches try vertices by decreasing degree inside S (ties: lower id) and
 * are cut as soon as one component of S - v has a lower bound above k - 1.
 * Lower bounds come from degeneracy + 1; the DFS elimination tree supplies the
 * initial upper bound.
 *
 * With threads > 1 the candidates at the root of each decision query are
 * explored concurrently over a shared memo.  Values and witnesses do not
 * depend on the thread count; only the stats do.
 */
class TreedepthSolver
{
public:
  explicit TreedepthSolver(const Graph &g, SolverConfig config = {});

  /// Throws BudgetExhausted.  Witness reconstruction itself is not budgeted.
  auto solve() -> TdCertificate;
  /// Throws BudgetExhausted.
  auto at_most(int k) -> bool;

  auto stats() const -> SolverStats;

private:
  struct Candidate
  {
    int vertex;
    int degree;
  };

  auto decide(VertexSet s, int k, bool top) -> bool;
  auto branch_succeeds(VertexSet s, int v, int k) -> bool;
  auto solve_connected(VertexSet s) -> int;
  auto quick_lower(VertexSet s) -> int;
  auto candidates(VertexSet s) const -> std::vector<Candidate>;
  auto assign_witness(VertexSet s, int rank, std::vector<int> &labels) -> void;
  auto count_node() -> void;
  auto elapsed_ms() const -> double;

  const Graph &_graph;
  SolverConfig _config;
  MemoStore _memo;
  std::atomic<std::uint64_t> _nodes{0};
  bool _budget_enforced = true;
  std::chrono::steady_clock::time_point _start;
};

/// Exact tree-depth with witness.  Throws BudgetExhausted.
auto treedepth(const Graph &g, SolverConfig config = {}) -> TdCertificate;

/// td(g) <= k.  Throws BudgetExhausted.
auto treedepth_le(const Graph &g, int k, SolverConfig config = {}) -> bool;

/// Cheap certified bounds: clique number and a DFS path below, DFS tree depth above.
auto bounds(const Graph &g) -> Bounds;

/// Clique number; exact up to 40 vertices, greedy beyond.
auto clique_lower_bound(const Graph &g) -> int;

/// Number of vertices on the deepest root-to-leaf path of a DFS forest (lowest ids first).
auto dfs_depth(const Graph &g, VertexSet within) -> int;

inline constexpr int brute_force_vertex_cap = 8;

/// Smallest k for which some k-labelling passes the path-definition check.  At most 8 vertices.
auto brute_force_td(const Graph &g) -> int;

} // namespace tdlab
