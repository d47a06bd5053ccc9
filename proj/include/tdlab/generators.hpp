#pragma once

#include "tdlab/graph.hpp"

#include <vector>

namespace tdlab {

// Every family uses a fixed vertex numbering so rankings can name vertices.

/// K_k on 0..k-1.  1 <= k <= 64.
auto complete(int k) -> Graph;

/// Path 0-1-...-(n-1).  1 <= n <= 64.
auto path(int n) -> Graph;

/// Cycle 0-1-...-(n-1)-0.  3 <= n <= 64.
auto cycle(int n) -> Graph;

/// K_k on 0..k-1 with pendant vertex k+i attached to i.  1 <= k <= 32.
auto k_net(int k) -> Graph;

/// K_a □ K_2: cliques on 0..a-1 and a..2a-1 joined by rungs i -- a+i.  1 <= a <= 32.
auto cartesian_k2(int a) -> Graph;

/**
 * Vertex roles of H_n, the complete graph K_n with every edge at one vertex
 * subdivided once.
 *
 * hub = 0, clique = {1..n-1}, subdivision = {n..2n-2}; subdivision[i] is the
 * degree-2 vertex between the hub and clique[i].
 */
struct HnLayout
{
  int n = 0;
  int hub = 0;
  std::vector<int> clique;
  std::vector<int> subdivision;

  auto in_clique(int x) const -> bool { return x >= 1 && x <= n - 1; }
  auto in_subdivision(int x) const -> bool { return x >= n && x <= 2 * n - 2; }
  /// Clique partner of a subdivision vertex and vice versa.
  auto partner(int x) const -> int { return in_clique(x) ? x + n - 1 : x - (n - 1); }
};

struct HnGraph
{
  Graph graph;
  HnLayout layout;
};

/// H_n for 3 <= n <= 32; n = 3 gives the 5-cycle used as the induction base.
auto h_n(int n) -> HnGraph;
auto hn_layout(int n) -> HnLayout;

} // namespace tdlab
