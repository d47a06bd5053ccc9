#include "tdlab/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace tdlab {

namespace {

struct Line
{
  std::string_view text;
  int number;
};

auto meaningful_lines(std::string_view text) -> std::vector<Line> {
  std::vector<Line> lines;
  int number = 0;
  while (!text.empty()) {
    ++number;
    auto end = text.find('\n');
    auto line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#')
      continue;
    lines.push_back({line, number});
  }
  return lines;
}

/// Splits a line into integer fields, reporting the column of the first bad token.
auto integer_fields(const Line &line) -> std::vector<std::pair<long long, int>> {
  std::vector<std::pair<long long, int>> fields;
  std::size_t pos = 0;
  const auto text = line.text;
  while (pos < text.size()) {
    if (text[pos] == ' ' || text[pos] == '\t') {
      ++pos;
      continue;
    }
    const int column = static_cast<int>(pos) + 1;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    const auto consumed = static_cast<std::size_t>(ptr - (text.data() + pos));
    const bool boundary = pos + consumed == text.size() || text[pos + consumed] == ' ' || text[pos + consumed] == '\t';
    if (ec != std::errc{} || consumed == 0 || !boundary)
      throw ParseError("expected an integer", line.number, column);
    fields.emplace_back(value, column);
    pos += consumed;
  }
  return fields;
}

constexpr int graph6_offset = 63;

} // namespace

auto write_edge_list(const Graph &g) -> std::string {
  const auto edges = g.edges();
  std::string out = std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
  for (const auto &e : edges)
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

auto parse_edge_list(std::string_view text) -> Graph {
  const auto lines = meaningful_lines(text);
  if (lines.empty())
    throw ParseError("empty edge list", 1, 1);
  const auto header = integer_fields(lines[0]);
  if (header.size() != 2)
    throw ParseError("header must be `n m`", lines[0].number, 1);
  const auto [n, n_col] = header[0];
  const auto [m, m_col] = header[1];
  if (n < 1 || n > Graph::max_vertices)
    throw ParseError("vertex count outside 1..64", lines[0].number, n_col);
  if (m < 0 || m > n * (n - 1) / 2)
    throw ParseError("edge count impossible for a simple graph", lines[0].number, m_col);
  if (static_cast<long long>(lines.size()) - 1 != m)
    throw ParseError("header announces " + std::to_string(m) + " edges but " + std::to_string(lines.size() - 1) +
                         " edge lines follow",
                     lines.back().number, 1);

  std::vector<VertexSet> rows(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = integer_fields(lines[i]);
    if (fields.size() != 2)
      throw ParseError("edge line must be `u v`", lines[i].number, 1);
    for (const auto &[x, col] : fields)
      if (x < 0 || x >= n)
        throw ParseError("vertex " + std::to_string(x) + " out of range", lines[i].number, col);
    const int u = static_cast<int>(fields[0].first);
    const int v = static_cast<int>(fields[1].first);
    if (u == v)
      throw ParseError("self-loop", lines[i].number, fields[1].second);
    if (rows[u].contains(v))
      throw ParseError("repeated edge", lines[i].number, fields[0].second);
    rows[u].insert(v);
    rows[v].insert(u);
  }
  return Graph::from_adjacency(std::move(rows));
}

auto write_graph6(const Graph &g) -> std::string {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + graph6_offset));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + graph6_offset));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + graph6_offset));
    out.push_back(static_cast<char>((n & 0x3f) + graph6_offset));
  }
  // Upper triangle column by column: (0,1), (0,2), (1,2), (0,3), ...
  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + graph6_offset));
        group = 0;
        filled = 0;
      }
    }
  if (filled > 0)
    out.push_back(static_cast<char>((group << (6 - filled)) + graph6_offset));
  return out;
}

auto parse_graph6(std::string_view text) -> Graph {
  const auto lines = meaningful_lines(text);
  if (lines.size() != 1)
    throw ParseError(lines.empty() ? "empty graph6 input" : "expected exactly one graph6 line",
                     lines.empty() ? 1 : lines[1].number, 1);
  const int line_no = lines[0].number;
  auto body = lines[0].text;
  std::size_t start = body.find_first_not_of(" \t");
  std::size_t stop = body.find_last_not_of(" \t");
  body = body.substr(start, stop - start + 1);
  std::size_t col_base = start;
  constexpr std::string_view header = ">>graph6<<";
  if (body.starts_with(header)) {
    body.remove_prefix(header.size());
    col_base += header.size();
  }

  for (std::size_t i = 0; i < body.size(); ++i) {
    const auto c = static_cast<unsigned char>(body[i]);
    if (c < 63 || c > 126)
      throw ParseError("character outside the graph6 range", line_no, static_cast<int>(col_base + i) + 1);
  }
  if (body.empty())
    throw ParseError("missing graph6 order byte", line_no, static_cast<int>(col_base) + 1);

  std::size_t pos = 0;
  long long n = 0;
  if (body[0] != 126) {
    n = body[0] - graph6_offset;
    pos = 1;
  } else {
    if (body.size() < 4 || body[1] == 126)
      throw ParseError("unsupported graph6 order encoding", line_no, static_cast<int>(col_base) + 1);
    n = ((body[1] - graph6_offset) << 12) | ((body[2] - graph6_offset) << 6) | (body[3] - graph6_offset);
    pos = 4;
  }
  if (n < 1 || n > Graph::max_vertices)
    throw ParseError("graph6 order " + std::to_string(n) + " outside 1..64", line_no, static_cast<int>(col_base) + 1);

  const long long pairs = n * (n - 1) / 2;
  const auto expected = static_cast<std::size_t>((pairs + 5) / 6);
  if (body.size() - pos != expected)
    throw ParseError("graph6 body has " + std::to_string(body.size() - pos) + " bytes, expected " +
                         std::to_string(expected),
                     line_no, static_cast<int>(col_base + pos) + 1);

  std::vector<VertexSet> rows(n);
  long long bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      const int value = body[pos + bit / 6] - graph6_offset;
      if ((value >> (5 - bit % 6)) & 1) {
        rows[i].insert(j);
        rows[j].insert(i);
      }
    }
  if (pairs % 6 != 0) {
    const int last = body.back() - graph6_offset;
    if ((last & ((1 << (6 - pairs % 6)) - 1)) != 0)
      throw ParseError("nonzero graph6 padding bits", line_no, static_cast<int>(col_base + body.size()));
  }
  return Graph::from_adjacency(std::move(rows));
}

auto detect_format(std::string_view text) -> GraphFormat {
  const auto lines = meaningful_lines(text);
  if (lines.empty())
    return GraphFormat::EdgeList;
  const auto line = lines[0].text;
  const auto first = line.find_first_not_of(" \t");
  return std::isdigit(static_cast<unsigned char>(line[first])) ? GraphFormat::EdgeList : GraphFormat::Graph6;
}

auto parse_graph(std::string_view text, GraphFormat format) -> Graph {
  return format == GraphFormat::EdgeList ? parse_edge_list(text) : parse_graph6(text);
}

auto parse_graph(std::string_view text) -> Graph {
  return parse_graph(text, detect_format(text));
}

auto write_graph(const Graph &g, GraphFormat format) -> std::string {
  return format == GraphFormat::EdgeList ? write_edge_list(g) : write_graph6(g) + "\n";
}

auto parse_format_name(std::string_view name) -> GraphFormat {
  if (name == "edgelist")
    return GraphFormat::EdgeList;
  if (name == "graph6")
    return GraphFormat::Graph6;
  throw std::invalid_argument("unknown graph format '" + std::string(name) + "'");
}

} // namespace tdlab
