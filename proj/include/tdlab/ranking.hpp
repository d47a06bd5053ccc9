#pragma once

#include "tdlab/graph.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tdlab {

/// Labels 1..colors, one per vertex.  Construction rejects labels outside that range.
class Ranking
{
public:
  Ranking(std::vector<int> labels, int colors);

  /// Uses the largest label as the color count.
  static auto from_labels(std::vector<int> labels) -> Ranking;

  auto colors() const -> int { return _colors; }
  auto size() const -> int { return static_cast<int>(_labels.size()); }
  auto labels() const -> std::span<const int> { return _labels; }
  auto operator[](int v) const -> int { return _labels[v]; }
  auto max_label() const -> int;
  /// Vertices carrying the given label.
  auto with_label(int label) const -> VertexSet;

  auto operator==(const Ranking &) const -> bool = default;

private:
  std::vector<int> _labels;
  int _colors;
};

/// Text form `k: l_0 l_1 ... l_{n-1}`.
auto to_string(const Ranking &r) -> std::string;
/// Throws ParseError.
auto parse_ranking(std::string_view text) -> Ranking;

/// Two vertices labelled `label` joined by `path` (endpoints included) with no label above it.
struct Violation
{
  int label = 0;
  int first = 0;
  int second = 0;
  std::vector<int> path;
};

struct Valid
{};

using Verdict = std::variant<Valid, Violation>;

inline auto is_valid(const Verdict &v) -> bool { return std::holds_alternative<Valid>(v); }

/**
 * Checks that every path between two equally labelled vertices passes through
 * a strictly higher label.
 *
 * Equivalent test used here: for each label l, every connected component of
 * the subgraph induced on {x : label(x) <= l} holds at most one vertex with
 * label l.  If a path joins two l-labelled vertices without a higher label,
 * all of its vertices lie in that subgraph, so both ends share a component.
 * Conversely two l-labelled vertices in one component are joined by a path
 * inside it, and none of its vertices exceeds l.
 *
 * On failure returns the lowest offending label, its lowest-numbered vertex
 * that shares a component with another l-labelled vertex, and a shortest path
 * to the nearest such partner (ties broken by lower vertex id).
 * Throws std::invalid_argument when the ranking does not fit the graph.
 */
auto verify_ranking(const Graph &g, const Ranking &r) -> Verdict;

/// Path-definition check by explicit simple-path enumeration.  Exponential; test oracle only.
auto verify_ranking_by_paths(const Graph &g, std::span<const int> labels) -> bool;

/// Restriction of a labelling to the vertices of `keep`, renumbered ascending.
auto restrict_ranking(const Ranking &r, VertexSet keep) -> Ranking;

} // namespace tdlab
