#include "recsort/baselines.hpp"

#include <cmath>

namespace recsort::baselines {

std::vector<std::uint64_t> counting_sort(std::span<const std::uint64_t> values,
                                         std::uint64_t bound,
                                         std::uint64_t max_cells) {
  if (bound > max_cells) {
    fail(errc::cell_budget_exceeded,
         "count range " + std::to_string(bound) + " exceeds budget " +
             std::to_string(max_cells));
  }
  std::vector<std::uint64_t> counts(bound, 0);
  for (std::uint64_t v : values) {
    if (v >= bound) {
      fail(errc::range_exceeded, "value " + std::to_string(v) +
                                     " is outside [0, " + std::to_string(bound) + ")");
    }
    ++counts[v];
  }
  std::vector<std::uint64_t> out;
  out.reserve(values.size());
  for (std::uint64_t v = 0; v < bound; ++v) {
    for (std::uint64_t c = counts[v]; c > 0; --c) out.push_back(v);
  }
  return out;
}

std::vector<std::uint64_t> radix_sort_lsd(std::span<const std::uint64_t> values) {
  std::vector<std::uint64_t> out(values.begin(), values.end());
  radix_sort_lsd_by(out, [](std::uint64_t v) { return v; });
  return out;
}

std::vector<double> bucket_sort(std::span<const double> values, double lo,
                                double hi, std::size_t bucket_count) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    fail(errc::invalid_range, "bucket range must be finite with lo < hi");
  }
  if (bucket_count < 1) {
    fail(errc::invalid_argument, "need at least one bucket");
  }
  std::vector<std::vector<double>> buckets(bucket_count);
  const double width = hi - lo;
  for (double v : values) {
    if (!(v >= lo) || !(v < hi)) {
      fail(errc::out_of_range, "value " + std::to_string(v) +
                                   " is outside the bucket range");
    }
    auto idx = static_cast<std::size_t>((v - lo) / width * static_cast<double>(bucket_count));
    if (idx >= bucket_count) idx = bucket_count - 1;  // fp edge
    buckets[idx].push_back(v);
  }
  std::vector<double> out;
  out.reserve(values.size());
  for (std::vector<double>& bucket : buckets) {
    // insertion sort per bucket
    for (std::size_t i = 1; i < bucket.size(); ++i) {
      double v = bucket[i];
      std::size_t j = i;
      while (j > 0 && bucket[j - 1] > v) {
        bucket[j] = bucket[j - 1];
        --j;
      }
      bucket[j] = v;
    }
    out.insert(out.end(), bucket.begin(), bucket.end());
  }
  return out;
}

}  // namespace recsort::baselines
