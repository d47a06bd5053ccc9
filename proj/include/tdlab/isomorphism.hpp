#pragma once

#include "tdlab/graph.hpp"

#include <optional>
#include <vector>

namespace tdlab {

inline constexpr int isomorphism_vertex_cap = 10;

/// Edge-preserving bijection g -> h (mapping[x] is the image of x), if one exists.
/// Exhaustive permutation search with degree pruning; throws
/// std::invalid_argument above isomorphism_vertex_cap vertices.
auto find_isomorphism(const Graph &g, const Graph &h) -> std::optional<std::vector<int>>;

auto is_isomorphic(const Graph &g, const Graph &h) -> bool;

} // namespace tdlab
