#include "tdlab/memo.hpp"

#include <algorithm>

namespace tdlab {

auto MemoStore::find(VertexSet key) const -> std::optional<MemoEntry> {
  auto &shard = shard_for(key);
  std::lock_guard guard(shard.lock);
  auto it = shard.table.find(key.bits());
  if (it == shard.table.end())
    return std::nullopt;
  return it->second;
}

auto MemoStore::tighten(VertexSet key, int lower, int upper) -> MemoEntry {
  auto &shard = shard_for(key);
  std::lock_guard guard(shard.lock);
  auto it = shard.table.find(key.bits());
  if (it == shard.table.end()) {
    MemoEntry fresh{static_cast<std::int8_t>(lower), static_cast<std::int8_t>(upper)};
    if (_size.load(std::memory_order_relaxed) >= _capacity)
      return fresh;
    shard.table.emplace(key.bits(), fresh);
    _size.fetch_add(1, std::memory_order_relaxed);
    return fresh;
  }
  auto &entry = it->second;
  entry.lower = static_cast<std::int8_t>(std::max<int>(entry.lower, lower));
  entry.upper = static_cast<std::int8_t>(std::min<int>(entry.upper, upper));
  return entry;
}

} // namespace tdlab
