#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "recsort/key_model.hpp"

namespace recsort {

// Per-leading-digit occupancy flag and minimum suffix (the H_Min map).
struct HMinEntry {
  bool occupied = false;
  std::uint64_t min_suffix = 0;
};

// The two traverse maps: for each leading digit, the minimum and maximum
// suffix value reached so far. max is -1 while a row is untouched, so any
// real suffix (>= 0) updates it.
class TraverseMaps {
 public:
  explicit TraverseMaps(const KeySpec& spec)
      : h_min_(spec.radix), h_max_(spec.radix, -1) {}

  std::uint32_t rows() const noexcept {
    return static_cast<std::uint32_t>(h_min_.size());
  }
  const HMinEntry& h_min(std::uint32_t row) const { return h_min_[row]; }
  std::int64_t h_max(std::uint32_t row) const { return h_max_[row]; }

  void update(std::uint32_t row, std::uint64_t suffix) {
    HMinEntry& e = h_min_[row];
    if (!e.occupied) {
      e.occupied = true;
      e.min_suffix = suffix;
    } else if (suffix < e.min_suffix) {
      e.min_suffix = suffix;
    }
    if (static_cast<std::int64_t>(suffix) > h_max_[row]) {
      h_max_[row] = static_cast<std::int64_t>(suffix);
    }
  }

 private:
  std::vector<HMinEntry> h_min_;
  std::vector<std::int64_t> h_max_;
};

// The flat, row-major realization of the digit-indexed hypercube: cell k
// holds the multiplicity of key k. Cell reads/writes are tallied in
// cell_accesses() so cost assertions need no separate build mode.
class CountSpace {
 public:
  explicit CountSpace(const KeySpec& spec)
      : spec_(spec),
        suffix_modulus_(spec.suffix_modulus()),
        counts_(spec.cell_count(), 0) {}

  const KeySpec& spec() const noexcept { return spec_; }
  std::uint64_t cell_limit() const noexcept { return counts_.size(); }
  std::uint64_t suffix_modulus() const noexcept { return suffix_modulus_; }
  std::uint64_t total_inserted() const noexcept { return total_inserted_; }
  std::uint64_t cell_accesses() const noexcept { return cell_accesses_; }

  std::uint64_t cell(std::uint64_t key) const {
    ++cell_accesses_;
    return counts_[key];
  }

  void increment(std::uint64_t key) {
    ++cell_accesses_;
    ++counts_[key];
    ++total_inserted_;
  }

  // Direct sum over all cells; not counted as accesses (invariant-suite aid).
  std::uint64_t sum_cells() const noexcept;

  // Number of cells with a nonzero count; not counted as accesses.
  std::uint64_t occupied_cells() const noexcept;

 private:
  KeySpec spec_;
  std::uint64_t suffix_modulus_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t total_inserted_ = 0;
  mutable std::uint64_t cell_accesses_ = 0;
};

struct HashedSpace {
  CountSpace space;
  TraverseMaps maps;
};

// Zeroed count space plus untouched maps for the given geometry.
HashedSpace new_space(const KeySpec& spec,
                      std::uint64_t max_cells = kDefaultCellBudget);

// One hashing-cycle step: bumps the key's cell and folds its suffix into the
// leading-digit row bounds.
void hash_insert(CountSpace& space, TraverseMaps& maps, const DigitKey& k);

// Called after each insertion with the number inserted so far.
using InsertSnapshot = std::function<void(
    std::size_t inserted, const CountSpace& space, const TraverseMaps& maps)>;

// The full hashing cycle over a key sequence. The snapshot callback is for
// invariant suites and is off by default.
HashedSpace build_count_space(std::span<const DigitKey> keys,
                              const KeySpec& spec,
                              const InsertSnapshot& on_insert = {},
                              std::uint64_t max_cells = kDefaultCellBudget);

}  // namespace recsort
