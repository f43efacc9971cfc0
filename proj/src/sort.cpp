#include "recsort/sort.hpp"

#include <algorithm>

namespace recsort {

DecimalKeySortResult sort_decimal_keys(std::span<const std::string> values,
                                       std::uint64_t max_cells) {
  NormalizedDataset norm = normalize_dataset(values, max_cells);
  HashedSpace built = build_count_space(norm.keys, norm.spec, {}, max_cells);
  std::vector<std::uint64_t> keys(norm.keys.size());
  const ExtractionReport report = extract(built.space, built.maps, keys);
  return DecimalKeySortResult{std::move(keys), norm.spec, report};
}

DecimalSortResult sort_decimals(std::span<const std::string> values,
                                std::uint64_t max_cells) {
  DecimalKeySortResult sorted = sort_decimal_keys(values, max_cells);
  DecimalSortResult out;
  out.spec = sorted.spec;
  out.report = sorted.report;
  out.values.reserve(sorted.keys.size());
  for (std::uint64_t key : sorted.keys) {
    out.values.push_back(reconstruct_value(key, sorted.spec));
  }
  return out;
}

IntegerSortResult sort_integers(std::span<const std::int64_t> values,
                                std::uint64_t max_cells) {
  std::uint64_t max_value = 0;
  for (std::int64_t v : values) {
    if (v < 0) {
      fail(errc::negative_value,
           "negative values are not supported: " + std::to_string(v));
    }
    max_value = std::max(max_value, static_cast<std::uint64_t>(v));
  }
  const std::uint32_t digits = decimal_digit_count(max_value);
  const KeySpec spec = make_key_spec(10, digits, digits, max_cells);

  std::vector<DigitKey> keys;
  keys.reserve(values.size());
  for (std::int64_t v : values) {
    keys.push_back(DigitKey{static_cast<std::uint64_t>(v), spec});
  }
  HashedSpace built = build_count_space(keys, spec, {}, max_cells);
  std::vector<std::uint64_t> sorted(keys.size());
  const ExtractionReport report = extract(built.space, built.maps, sorted);

  IntegerSortResult out;
  out.spec = spec;
  out.report = report;
  out.values.reserve(sorted.size());
  for (std::uint64_t key : sorted) {
    out.values.push_back(static_cast<std::int64_t>(key));
  }
  return out;
}

StringSortResult sort_strings(std::span<const std::string> values,
                              const Alphabet& alphabet,
                              std::uint64_t max_cells) {
  NormalizedDataset norm = strings_to_keys(values, alphabet, max_cells);
  HashedSpace built = build_count_space(norm.keys, norm.spec, {}, max_cells);
  std::vector<std::uint64_t> sorted(norm.keys.size());
  const ExtractionReport report = extract(built.space, built.maps, sorted);

  StringSortResult out;
  out.spec = norm.spec;
  out.report = report;
  out.values.reserve(sorted.size());
  for (std::uint64_t key : sorted) {
    out.values.push_back(key_to_string(key, norm.spec, alphabet));
  }
  return out;
}

}  // namespace recsort
