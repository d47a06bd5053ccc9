#pragma once

#include "tdlab/graph.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace tdlab {

/// Malformed graph or ranking text.  Line and column are 1-based.
class ParseError : public std::runtime_error
{
public:
  ParseError(const std::string &what, int line, int column)
      : std::runtime_error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        _line(line), _column(column) {}

  auto line() const -> int { return _line; }
  auto column() const -> int { return _column; }

private:
  int _line;
  int _column;
};

enum class GraphFormat { EdgeList, Graph6 };

/*
 * Edge-list text:
 *
 *   # optional comment lines anywhere
 *   n m
 *   u v        (m lines, 0-based)
 *
 * Output always lists edges with u < v in lexicographic order.
 */
auto write_edge_list(const Graph &g) -> std::string;
auto parse_edge_list(std::string_view text) -> Graph;

/// graph6 encoding of one graph, without trailing newline.
auto write_graph6(const Graph &g) -> std::string;
/// Accepts an optional ">>graph6<<" header and surrounding whitespace.
auto parse_graph6(std::string_view text) -> Graph;

/// First meaningful line starting with a digit means edge list; anything else is graph6.
auto detect_format(std::string_view text) -> GraphFormat;
auto parse_graph(std::string_view text, GraphFormat format) -> Graph;
auto parse_graph(std::string_view text) -> Graph;
auto write_graph(const Graph &g, GraphFormat format) -> std::string;

auto parse_format_name(std::string_view name) -> GraphFormat;

} // namespace tdlab
