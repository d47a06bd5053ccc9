#pragma once

#include "tdlab/vertex_set.hpp"

#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <unordered_map>

namespace tdlab {

/// Proven interval for the tree-depth of one connected vertex subset.
struct MemoEntry
{
  std::int8_t lower = 0;
  std::int8_t upper = 64;

  auto solved() const -> bool { return lower == upper; }
};

/**
 * Subset-keyed memo shared by solver threads.
 *
 * Writers only ever tighten an entry (raise `lower`, drop `upper`), so
 * concurrent updates of one key commute and every interleaving ends with the
 * same interval.  Once `capacity` keys exist new keys are dropped; existing
 * ones still tighten.
 */
class MemoStore
{
public:
  explicit MemoStore(std::size_t capacity = std::size_t{1} << 24) : _capacity(capacity) {}

  MemoStore(const MemoStore &) = delete;
  auto operator=(const MemoStore &) -> MemoStore & = delete;

  auto find(VertexSet key) const -> std::optional<MemoEntry>;
  /// Tightens (or inserts) the entry for `key` and returns the merged interval.
  auto tighten(VertexSet key, int lower, int upper) -> MemoEntry;

  auto size() const -> std::size_t { return _size.load(std::memory_order_relaxed); }
  auto capacity() const -> std::size_t { return _capacity; }

private:
  static constexpr std::size_t shard_count = 64;

  struct Shard
  {
    mutable std::mutex lock;
    std::unordered_map<std::uint64_t, MemoEntry> table;
  };

  auto shard_for(VertexSet key) const -> Shard & {
    // Fibonacci hashing spreads the low-entropy subset words across shards.
    return _shards[(key.bits() * 0x9E3779B97F4A7C15ULL) >> 58];
  }

  std::size_t _capacity;
  std::atomic<std::size_t> _size{0};
  mutable std::array<Shard, shard_count> _shards;
};

} // namespace tdlab
