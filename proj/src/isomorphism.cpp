#include "tdlab/isomorphism.hpp"

#include <algorithm>
#include <stdexcept>

namespace tdlab {

namespace {

class Matcher
{
public:
  Matcher(const Graph &g, const Graph &h) : _g(g), _h(h), _map(g.order(), -1) {}

  auto run() -> bool { return extend(0, VertexSet{}); }
  auto mapping() const -> const std::vector<int> & { return _map; }

private:
  auto extend(int x, VertexSet used) -> bool {
    if (x == _g.order())
      return true;
    for (int y = 0; y < _h.order(); ++y) {
      if (used.contains(y) || _g.degree(x) != _h.degree(y))
        continue;
      bool consistent = true;
      for (int p = 0; p < x && consistent; ++p)
        consistent = _g.adjacent(x, p) == _h.adjacent(y, _map[p]);
      if (!consistent)
        continue;
      _map[x] = y;
      if (extend(x + 1, used.with(y)))
        return true;
    }
    _map[x] = -1;
    return false;
  }

  const Graph &_g;
  const Graph &_h;
  std::vector<int> _map;
};

auto sorted_degrees(const Graph &g) -> std::vector<int> {
  auto d = g.degree_sequence();
  std::sort(d.begin(), d.end());
  return d;
}

} // namespace

auto find_isomorphism(const Graph &g, const Graph &h) -> std::optional<std::vector<int>> {
  if (g.order() > isomorphism_vertex_cap || h.order() > isomorphism_vertex_cap)
    throw std::invalid_argument("isomorphism test limited to " + std::to_string(isomorphism_vertex_cap) + " vertices");
  if (g.order() != h.order() || g.size() != h.size() || sorted_degrees(g) != sorted_degrees(h))
    return std::nullopt;
  Matcher matcher(g, h);
  if (!matcher.run())
    return std::nullopt;
  return matcher.mapping();
}

auto is_isomorphic(const Graph &g, const Graph &h) -> bool {
  return find_isomorphism(g, h).has_value();
}

} // namespace tdlab
