#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "recsort/error.hpp"
#include "recsort/key_model.hpp"

// Plain reference implementations of the parent algorithms, used as
// differential-test oracles and benchmark competitors. Deliberately
// unoptimized; benchmark comparisons against them reflect algorithmic shape,
// not tuned constants.

namespace recsort::baselines {

// Histogram sort over [0, bound).
std::vector<std::uint64_t> counting_sort(
    std::span<const std::uint64_t> values, std::uint64_t bound,
    std::uint64_t max_cells = kDefaultCellBudget);

// Stable LSD passes in base 10; the number of passes follows the widest key.
template <class T, class KeyFn>
void radix_sort_lsd_by(std::vector<T>& items, KeyFn key_of) {
  if (items.size() < 2) return;
  std::uint64_t max_key = 0;
  for (const T& item : items) max_key = std::max<std::uint64_t>(max_key, key_of(item));
  const std::uint32_t passes = decimal_digit_count(max_key);

  std::vector<T> scratch(items.size());
  std::uint64_t place = 1;
  for (std::uint32_t pass = 0; pass < passes; ++pass) {
    std::size_t counts[10] = {};
    for (const T& item : items) ++counts[(key_of(item) / place) % 10];
    std::size_t offsets[10];
    std::size_t running = 0;
    for (int d = 0; d < 10; ++d) {
      offsets[d] = running;
      running += counts[d];
    }
    for (T& item : items) scratch[offsets[(key_of(item) / place) % 10]++] = std::move(item);
    items.swap(scratch);
    if (pass + 1 < passes) place *= 10;
  }
}

std::vector<std::uint64_t> radix_sort_lsd(std::span<const std::uint64_t> values);

// Scatter into bucket_count equal-width buckets over [lo, hi), insertion-sort
// each bucket, concatenate.
std::vector<double> bucket_sort(std::span<const double> values, double lo,
                                double hi, std::size_t bucket_count);

// Ground-truth comparison sort for differential tests.
template <class T>
std::vector<T> oracle_sort(std::vector<T> values) {
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace recsort::baselines
