#pragma once

#include "tdlab/generators.hpp"
#include "tdlab/minors.hpp"
#include "tdlab/ranking.hpp"

#include <string>

namespace tdlab {

/// (n+1)-ranking of h_n(n): hub n+1, clique vertex i gets i+1, every subdivision vertex 1.  n >= 3.
auto witness_hn(int n) -> Ranking;

/**
 * ⌈3a/2⌉-ranking of cartesian_k2(a) for a >= 3.
 *
 * The separator T is the first ⌊a/2⌋ vertices of the first clique and the last
 * ⌈a/2⌉ of the second, so no rung lies inside T.  T takes labels
 * ⌈a/2⌉+1..⌈3a/2⌉ in vertex order; the rest of each clique counts up from 1.
 * When a is odd the second clique uses only 1..⌊a/2⌋ below T.
 */
auto witness_kak2(int a) -> Ranking;

/// Which of the explicit colorings of H_n minors applies.
enum class HnMinorCase {
  HubOrPairEdgeDeleted,   ///< hub and the clique partner share 2, subdivision 1
  CliqueEdgeDeleted,      ///< the two clique ends share 1, subdivision 2, hub 3
  SubdivisionContracted,  ///< H_{n-1} plus a vertex joined to hub and clique
  CliqueEdgeContracted,   ///< subdivision 1, merged vertex 2, hub 3
  VertexDeleted,          ///< restriction of the first incident edge deletion
};

auto to_string(HnMinorCase c) -> std::string;

struct MinorWitness
{
  Graph minor;
  Ranking ranking;
  HnMinorCase which;
};

/// The minor of h_n(n) produced by `step` and an n-coloring of it, numbered per the
/// minor re-indexing convention.  n >= 4; throws std::invalid_argument on an invalid step.
auto hn_minor_witness(int n, const MinorStep &step) -> MinorWitness;

} // namespace tdlab
