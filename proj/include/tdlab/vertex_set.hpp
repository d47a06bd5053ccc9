#pragma once

#include <bit>
#include <cstdint>
#include <iterator>

namespace tdlab {

/// Subset of the vertices 0..63 of a host graph, packed into one machine word.
class VertexSet
{
public:
  class iterator
  {
  public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int *;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : _rest(rest) {}

    constexpr auto operator*() const -> int { return std::countr_zero(_rest); }
    constexpr auto operator++() -> iterator & {
      _rest &= _rest - 1;
      return *this;
    }
    constexpr auto operator++(int) -> iterator {
      auto old = *this;
      ++*this;
      return old;
    }
    constexpr auto operator==(const iterator &) const -> bool = default;

  private:
    std::uint64_t _rest = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : _bits(bits) {}

  /// The set {0, ..., n-1}.
  static constexpr auto prefix(int n) -> VertexSet {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr auto single(int v) -> VertexSet {
    return VertexSet(std::uint64_t{1} << v);
  }

  constexpr auto bits() const -> std::uint64_t { return _bits; }
  constexpr auto empty() const -> bool { return _bits == 0; }
  constexpr auto size() const -> int { return std::popcount(_bits); }
  constexpr auto contains(int v) const -> bool { return (_bits >> v) & 1U; }
  /// Lowest member; undefined on the empty set.
  constexpr auto first() const -> int { return std::countr_zero(_bits); }

  constexpr auto insert(int v) -> void { _bits |= std::uint64_t{1} << v; }
  constexpr auto erase(int v) -> void { _bits &= ~(std::uint64_t{1} << v); }

  constexpr auto with(int v) const -> VertexSet { return VertexSet(_bits | (std::uint64_t{1} << v)); }
  constexpr auto without(int v) const -> VertexSet { return VertexSet(_bits & ~(std::uint64_t{1} << v)); }

  constexpr auto subset_of(VertexSet other) const -> bool { return (_bits & ~other._bits) == 0; }
  constexpr auto intersects(VertexSet other) const -> bool { return (_bits & other._bits) != 0; }

  constexpr auto operator|(VertexSet o) const -> VertexSet { return VertexSet(_bits | o._bits); }
  constexpr auto operator&(VertexSet o) const -> VertexSet { return VertexSet(_bits & o._bits); }
  constexpr auto operator-(VertexSet o) const -> VertexSet { return VertexSet(_bits & ~o._bits); }
  constexpr auto operator|=(VertexSet o) -> VertexSet & { _bits |= o._bits; return *this; }
  constexpr auto operator&=(VertexSet o) -> VertexSet & { _bits &= o._bits; return *this; }
  constexpr auto operator-=(VertexSet o) -> VertexSet & { _bits &= ~o._bits; return *this; }

  constexpr auto operator==(const VertexSet &) const -> bool = default;
  constexpr auto operator<=>(const VertexSet &) const = default;

  constexpr auto begin() const -> iterator { return iterator(_bits); }
  constexpr auto end() const -> iterator { return iterator(0); }

private:
  std::uint64_t _bits = 0;
};

} // namespace tdlab
