#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "recsort/hashing.hpp"

namespace recsort {

struct ExtractionReport {
  std::uint64_t written = 0;          // elements emitted
  std::uint64_t cells_traversed = 0;  // count cells visited (the cost k)
};

// Called after each emitted element with the output length so far.
using EmitHook =
    std::function<void(std::uint64_t written, std::uint64_t key)>;

// Raster-scans occupied row spans [min_suffix, max_suffix] in ascending
// order, emitting each cell's multiplicity and stopping once every inserted
// element has been written. Rows whose occupancy flag is unset cost nothing.
ExtractionReport extract(const CountSpace& space, const TraverseMaps& maps,
                         std::span<std::uint64_t> out,
                         const EmitHook& on_emit = {});

struct SortedKeys {
  std::vector<DigitKey> keys;
  ExtractionReport report;
};

// Hashing cycle followed by extraction cycle: a sorted permutation of the
// input multiset.
SortedKeys sort_keys(std::span<const DigitKey> keys, const KeySpec& spec,
                     std::uint64_t max_cells = kDefaultCellBudget);

}  // namespace recsort
