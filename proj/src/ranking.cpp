#include "tdlab/ranking.hpp"

#include "tdlab/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace tdlab {

Ranking::Ranking(std::vector<int> labels, int colors) : _labels(std::move(labels)), _colors(colors) {
  if (_colors < 1)
    throw std::invalid_argument("ranking needs at least one color");
  for (std::size_t v = 0; v < _labels.size(); ++v)
    if (_labels[v] < 1 || _labels[v] > _colors)
      throw std::invalid_argument("label " + std::to_string(_labels[v]) + " of vertex " + std::to_string(v) +
                                  " outside 1.." + std::to_string(_colors));
}

auto Ranking::from_labels(std::vector<int> labels) -> Ranking {
  const int top = labels.empty() ? 1 : *std::max_element(labels.begin(), labels.end());
  return Ranking(std::move(labels), std::max(top, 1));
}

auto Ranking::max_label() const -> int {
  return _labels.empty() ? 0 : *std::max_element(_labels.begin(), _labels.end());
}

auto Ranking::with_label(int label) const -> VertexSet {
  VertexSet out;
  for (int v = 0; v < size(); ++v)
    if (_labels[v] == label)
      out.insert(v);
  return out;
}

auto to_string(const Ranking &r) -> std::string {
  std::string out = std::to_string(r.colors()) + ":";
  for (int label : r.labels())
    out += " " + std::to_string(label);
  return out;
}

auto parse_ranking(std::string_view text) -> Ranking {
  int line_no = 1;
  std::string_view line;
  while (true) {
    auto end = text.find('\n');
    line = text.substr(0, end);
    auto first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#')
      break;
    if (end == std::string_view::npos)
      throw ParseError("empty ranking", line_no, 1);
    text.remove_prefix(end + 1);
    ++line_no;
  }

  std::size_t pos = 0;
  auto skip_blanks = [&] {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r'))
      ++pos;
  };
  auto read_int = [&](const char *what) {
    skip_blanks();
    int value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
    if (ec != std::errc{})
      throw ParseError(std::string("expected ") + what, line_no, static_cast<int>(pos) + 1);
    pos = static_cast<std::size_t>(ptr - line.data());
    return value;
  };

  const int colors = read_int("color count");
  skip_blanks();
  if (pos >= line.size() || line[pos] != ':')
    throw ParseError("expected ':' after color count", line_no, static_cast<int>(pos) + 1);
  ++pos;
  if (colors < 1)
    throw ParseError("color count must be positive", line_no, 1);
  std::vector<int> labels;
  skip_blanks();
  while (pos < line.size()) {
    const auto column = static_cast<int>(pos) + 1;
    const int label = read_int("label");
    if (label < 1 || label > colors)
      throw ParseError("label outside 1.." + std::to_string(colors), line_no, column);
    labels.push_back(label);
    skip_blanks();
  }
  if (labels.empty())
    throw ParseError("ranking lists no labels", line_no, static_cast<int>(pos) + 1);
  return Ranking(std::move(labels), colors);
}

namespace {

/// Shortest path from `from` to the nearest vertex of `targets` inside `within`.
auto shortest_path(const Graph &g, VertexSet within, int from, VertexSet targets) -> std::vector<int> {
  std::vector<int> parent(g.order(), -1);
  VertexSet seen = VertexSet::single(from);
  std::vector<int> queue{from};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    for (int y : (g.neighbors(x) & within) - seen) {
      seen.insert(y);
      parent[y] = x;
      if (targets.contains(y)) {
        std::vector<int> path{y};
        while (path.back() != from)
          path.push_back(parent[path.back()]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(y);
    }
  }
  return {};
}

auto check_fit(const Graph &g, const Ranking &r) -> void {
  if (r.size() != g.order())
    throw std::invalid_argument("ranking has " + std::to_string(r.size()) + " labels for a graph of order " +
                                std::to_string(g.order()));
}

} // namespace

auto verify_ranking(const Graph &g, const Ranking &r) -> Verdict {
  check_fit(g, r);
  VertexSet at_most;
  for (int label = 1; label <= r.colors(); ++label) {
    const auto level = r.with_label(label);
    at_most |= level;
    if (level.size() < 2)
      continue;
    for (int x : level) {
      const auto comp = component_of(g, at_most, x);
      const auto partners = (comp & level).without(x);
      if (!partners.empty()) {
        auto path = shortest_path(g, at_most, x, partners);
        return Violation{label, x, path.back(), std::move(path)};
      }
    }
  }
  return Valid{};
}

namespace {

/// Extends simple paths from `start`; any path reaching another `label` vertex
/// before crossing a higher label is a violation.
auto path_reaches_twin(const Graph &g, std::span<const int> labels, int start, int at, VertexSet visited) -> bool {
  for (int y : g.neighbors(at) - visited) {
    if (labels[y] == labels[start])
      return true;
    if (labels[y] > labels[start])
      continue;
    if (path_reaches_twin(g, labels, start, y, visited.with(y)))
      return true;
  }
  return false;
}

} // namespace

auto verify_ranking_by_paths(const Graph &g, std::span<const int> labels) -> bool {
  if (static_cast<int>(labels.size()) != g.order())
    throw std::invalid_argument("labelling does not match graph order");
  for (int x = 0; x < g.order(); ++x)
    if (path_reaches_twin(g, labels, x, x, VertexSet::single(x)))
      return false;
  return true;
}

auto restrict_ranking(const Ranking &r, VertexSet keep) -> Ranking {
  std::vector<int> labels;
  for (int v : keep)
    labels.push_back(r[v]);
  return Ranking(std::move(labels), r.colors());
}

} // namespace tdlab
