#include "recsort/extraction.hpp"

namespace recsort {

ExtractionReport extract(const CountSpace& space, const TraverseMaps& maps,
                         std::span<std::uint64_t> out, const EmitHook& on_emit) {
  const std::uint64_t total = space.total_inserted();
  if (out.size() < total) {
    fail(errc::buffer_too_small,
         "output buffer holds " + std::to_string(out.size()) + " keys, need " +
             std::to_string(total));
  }

  ExtractionReport report;
  const std::uint64_t mod = space.suffix_modulus();
  for (std::uint32_t row = 0; row < maps.rows() && report.written < total; ++row) {
    const HMinEntry& lo = maps.h_min(row);
    if (!lo.occupied) continue;  // untouched rows cost no cell visits
    const auto hi = static_cast<std::uint64_t>(maps.h_max(row));
    const std::uint64_t base = static_cast<std::uint64_t>(row) * mod;
    for (std::uint64_t suffix = lo.min_suffix; suffix <= hi; ++suffix) {
      ++report.cells_traversed;
      const std::uint64_t key = base + suffix;
      for (std::uint64_t copies = space.cell(key); copies > 0; --copies) {
        out[report.written++] = key;
        if (on_emit) on_emit(report.written, key);
      }
      if (report.written == total) break;
    }
  }
  return report;
}

SortedKeys sort_keys(std::span<const DigitKey> keys, const KeySpec& spec,
                     std::uint64_t max_cells) {
  HashedSpace built = build_count_space(keys, spec, {}, max_cells);
  std::vector<std::uint64_t> out(keys.size());
  const ExtractionReport report = extract(built.space, built.maps, out);

  SortedKeys sorted;
  sorted.report = report;
  sorted.keys.reserve(out.size());
  for (std::uint64_t key : out) sorted.keys.push_back(DigitKey{key, spec});
  return sorted;
}

}  // namespace recsort
