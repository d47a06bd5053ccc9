#pragma once

#include "tdlab/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tdlab {

/// Every connected graph on vertex set 0..n-1 (labelled, not up to isomorphism).  1 <= n <= 7.
auto connected_labelled_graphs(int n) -> std::vector<Graph>;

/// Uniform G(n, p) sample; `seed` fixes the stream.
auto random_graph(int n, double p, std::uint64_t seed) -> Graph;

struct SweepResult
{
  std::size_t checked = 0;
  std::size_t disagreements = 0;
  std::string first_failure; ///< empty when everything agreed

  auto ok() const -> bool { return disagreements == 0; }
};

// Sweeps loop over independent graphs.  threads == 1 is the serial reference
// path; larger values split the loop with OpenMP.  Results are identical for
// every thread count: counts are summed and the reported failure is the one
// with the lowest index.

/// Exact solver value and certificate against brute_force_td.
auto oracle_sweep(const std::vector<Graph> &graphs, int threads = 1) -> SweepResult;

/// Star-clique uniqueness test against the direct labelling search, every vertex of every graph.
auto starclique_sweep(const std::vector<Graph> &graphs, int threads = 1) -> SweepResult;

/// Component criterion against the path-enumeration oracle for every labelling
/// with labels 1..colors of every graph.
auto criterion_sweep(const std::vector<Graph> &graphs, int colors, int threads = 1) -> SweepResult;

} // namespace tdlab
