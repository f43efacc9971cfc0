#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "recsort/extraction.hpp"
#include "recsort/key_model.hpp"

// Public sorting surface: normalization, hashing and extraction composed for
// decimal numerals, integers and fixed-alphabet strings. Not in place: the
// auxiliary count space holds radix^total_digits cells. Values are sorted,
// not records, so equal elements lose their identity (unstable by design of
// the count representation).

namespace recsort {

struct DecimalKeySortResult {
  std::vector<std::uint64_t> keys;  // non-decreasing
  KeySpec spec;
  ExtractionReport report;
};

struct DecimalSortResult {
  std::vector<std::string> values;  // padded rendering, non-decreasing
  KeySpec spec;
  ExtractionReport report;
};

struct IntegerSortResult {
  std::vector<std::int64_t> values;
  KeySpec spec;
  ExtractionReport report;
};

struct StringSortResult {
  std::vector<std::string> values;  // the original (unpadded) strings
  KeySpec spec;
  ExtractionReport report;
};

// normalize + hash + extract, without rendering the sorted keys back to text.
DecimalKeySortResult sort_decimal_keys(
    std::span<const std::string> values,
    std::uint64_t max_cells = kDefaultCellBudget);

// Full decimal pipeline; output values carry the dataset's common scale
// ("7" sorts as and renders to "7.0" when any input has one fractional
// digit).
DecimalSortResult sort_decimals(std::span<const std::string> values,
                                std::uint64_t max_cells = kDefaultCellBudget);

// Integer fast path (scale 0); negative inputs raise errc::negative_value.
IntegerSortResult sort_integers(std::span<const std::int64_t> values,
                                std::uint64_t max_cells = kDefaultCellBudget);

// Lexicographic string sort over a fixed alphabet.
StringSortResult sort_strings(std::span<const std::string> values,
                              const Alphabet& alphabet,
                              std::uint64_t max_cells = kDefaultCellBudget);

}  // namespace recsort
