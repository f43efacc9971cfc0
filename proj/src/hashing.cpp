#include "recsort/hashing.hpp"

namespace recsort {

std::uint64_t CountSpace::sum_cells() const noexcept {
  std::uint64_t sum = 0;
  for (std::uint64_t c : counts_) sum += c;
  return sum;
}

std::uint64_t CountSpace::occupied_cells() const noexcept {
  std::uint64_t occupied = 0;
  for (std::uint64_t c : counts_) occupied += c != 0;
  return occupied;
}

HashedSpace new_space(const KeySpec& spec, std::uint64_t max_cells) {
  const std::uint64_t cells = spec.cell_count();
  if (cells > max_cells) {
    fail(errc::cell_budget_exceeded,
         "count space needs " + std::to_string(cells) + " cells, budget is " +
             std::to_string(max_cells));
  }
  return HashedSpace{CountSpace(spec), TraverseMaps(spec)};
}

void hash_insert(CountSpace& space, TraverseMaps& maps, const DigitKey& k) {
  if (k.spec != space.spec()) {
    fail(errc::spec_mismatch, "key was built under a different key spec");
  }
  if (k.key >= space.cell_limit()) {
    fail(errc::spec_mismatch, "key " + std::to_string(k.key) +
                                  " is outside its spec's key space");
  }
  space.increment(k.key);
  const std::uint64_t mod = space.suffix_modulus();
  maps.update(static_cast<std::uint32_t>(k.key / mod), k.key % mod);
}

HashedSpace build_count_space(std::span<const DigitKey> keys,
                              const KeySpec& spec,
                              const InsertSnapshot& on_insert,
                              std::uint64_t max_cells) {
  HashedSpace built = new_space(spec, max_cells);
  std::size_t inserted = 0;
  for (const DigitKey& k : keys) {
    hash_insert(built.space, built.maps, k);
    ++inserted;
    if (on_insert) on_insert(inserted, built.space, built.maps);
  }
  return built;
}

}  // namespace recsort
