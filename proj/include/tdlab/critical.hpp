#pragma once

#include "tdlab/graph.hpp"
#include "tdlab/minors.hpp"
#include "tdlab/ranking.hpp"
#include "tdlab/solver.hpp"

#include <optional>
#include <vector>

namespace tdlab {

struct MinorResult
{
  MinorStep step;
  std::optional<int> td; ///< empty when the solver ran out of budget
};

struct CriticalityReport
{
  std::optional<int> base_td;
  std::vector<MinorResult> steps;
  std::vector<MinorStep> failing_steps;
  bool conclusive = true;
  bool critical = false;
};

/**
 * Checks every G - e and G / e, plus G - x for isolated x.  Deleting a
 * non-isolated vertex x gives a minor of G - e for any edge e at x, so those
 * deletions are covered without being enumerated.  Steps are reported in
 * sorted order; each minor is solved independently and may run in parallel.
 * Needs at least 2 vertices.
 */
auto is_critical(const Graph &g, SolverConfig config = {}) -> CriticalityReport;

/// td(star_clique(g, v)) < td(g).  Throws BudgetExhausted.
auto one_unique_starclique(const Graph &g, int v, SolverConfig config = {}) -> bool;

inline constexpr int direct_uniqueness_vertex_cap = 8;

/// An optimal ranking in which v alone carries label 1, found by exhaustive
/// labelling search; nullopt when none exists.  At most 8 vertices.
auto one_unique_direct(const Graph &g, int v, SolverConfig config = {}) -> std::optional<Ranking>;
/// Same search with td(g) supplied by the caller.
auto one_unique_direct(const Graph &g, int v, int td) -> std::optional<Ranking>;

struct VertexUniqueness
{
  int vertex = 0;
  std::optional<bool> starclique; ///< empty when inconclusive
  std::optional<bool> direct;     ///< empty when skipped or inconclusive
  bool direct_skipped = false;
  std::optional<Ranking> witness;

  auto one_unique() const -> std::optional<bool> { return starclique ? starclique : direct; }
  auto agree() const -> bool { return !starclique || !direct || *starclique == *direct; }
};

struct UniquenessReport
{
  std::optional<int> td;
  std::vector<VertexUniqueness> vertices;
  std::vector<int> non_1_unique;
  bool conclusive = true;
  bool methods_agree = true;
  bool one_unique = false;
};

/// Star-clique test for every vertex, plus the direct search when n <= 8.
auto uniqueness_report(const Graph &g, SolverConfig config = {}) -> UniquenessReport;

struct HnRow
{
  int n = 0;
  std::optional<int> td;
  bool critical = false;
  std::vector<int> non_1_unique;
  std::optional<int> starclique_td;
  std::optional<bool> starclique_isomorphic; ///< checked while 2n-2 fits the isomorphism cap
  bool witness_hn_ok = false;
  bool minor_witnesses_ok = false;
  bool methods_agree = true;
  bool complete = true;

  auto td_expected() const -> int { return n + 1; }
  auto starclique_expected() const -> int { return (3 * (n - 1) + 1) / 2; }
  auto witnesses_ok() const -> bool { return witness_hn_ok && minor_witnesses_ok; }
  auto passed() const -> bool;
};

/// Every claim about H_n for n = 4..n_max (4 <= n_max <= 8).
auto reproduce_hn(int n_max, SolverConfig config = {}) -> std::vector<HnRow>;
auto reproduce_hn_row(int n, SolverConfig config = {}) -> HnRow;

/// Every one-step minor coloring of h_n(n) is valid and uses at most n colors.
auto hn_minor_witnesses_valid(int n) -> bool;

} // namespace tdlab
