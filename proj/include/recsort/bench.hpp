#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "recsort/key_model.hpp"

namespace recsort::bench {

// One reproducible dataset: n_elements uniform draws from the cd-place grid
// inside [range_lo, range_hi), driven by SplitMix64.
struct DatasetSpec {
  std::size_t n_elements = 0;
  double range_lo = 0.0;
  double range_hi = 1.0;
  std::uint32_t cd = 0;  // fractional digits
  std::uint64_t seed = 0;

  bool operator==(const DatasetSpec&) const = default;
};

std::vector<std::string> generate(const DatasetSpec& spec);

// A range/cd column of the timing matrix.
struct CaseSpec {
  double range_lo = 0.0;
  double range_hi = 1.0;
  std::uint32_t cd = 0;

  bool operator==(const CaseSpec&) const = default;
};

std::string case_label(const CaseSpec& c);

// The five stock benchmark cases: (1,10) with cd 0..2 and (1,100) with cd 0..1.
std::vector<CaseSpec> reference_cases();

// Dimension bookkeeping for a case: the key geometry plus the count-array and
// traverse-map shapes written the way the n-dimensional rendition counts them
// (H_Min rows carry 2 slots per prefix level, H_Max 1; levels stack as
// 1 + 10 + 100 + ..., hence the repunit column counts).
struct KeyShape {
  std::uint32_t total_digits = 0;
  std::uint32_t integer_digits = 0;
  std::uint64_t cell_count = 0;
  std::string count_dims;  // e.g. "10x10x10"
  std::string h_min_dims;  // e.g. "10x22"
  std::string h_max_dims;  // e.g. "10x11"
};

KeyShape describe(const CaseSpec& c);

enum class Algorithm { recombinant, counting, radix, bucket, oracle };

std::string_view algorithm_name(Algorithm a) noexcept;
Algorithm algorithm_from_name(std::string_view name);

// One timed trial.
struct BenchRecord {
  std::string algorithm;
  DatasetSpec dataset;
  std::uint32_t trial = 0;
  double elapsed_seconds = 0.0;
  std::optional<std::uint64_t> extraction_cost;  // recombinant only

  bool operator==(const BenchRecord&) const = default;
};

struct MatrixOptions {
  std::vector<std::size_t> sizes;
  std::vector<CaseSpec> cases;
  std::vector<Algorithm> algorithms;
  std::uint32_t trials = 3;
  std::uint64_t seed = 42;
  std::uint64_t max_cells = kDefaultCellBudget;
};

// Runs every (case x size x algorithm x trial) cell in that nesting order.
// One dataset per (case, size), derived deterministically from the base seed;
// generation happens outside the timed region. The recombinant timing covers
// normalize + hash + extract; baseline timing covers the whole sort call on
// pre-converted inputs.
std::vector<BenchRecord> run_matrix(const MatrixOptions& options);

// Ordinary least squares of log10(mean seconds) against log10(n_elements).
struct ScalingReport {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::vector<std::pair<std::size_t, double>> mean_seconds;  // per size
  std::vector<std::pair<std::uint32_t, double>> constant_table;  // (d, C)
};

// Records must all belong to one algorithm and one case; needs >= 3 distinct
// sizes (errc::insufficient_data otherwise).
ScalingReport fit_scaling(std::span<const BenchRecord> records);

// The worst-case multiplier C = 1 + 10^(d-1)/d, kept exact.
struct WorstCaseConstant {
  std::uint64_t numerator = 0;    // d + 10^(d-1)
  std::uint64_t denominator = 1;  // d

  double value() const noexcept {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }
  // Exact integer test of C < (10d)^2.
  bool below_squared_bound() const noexcept;
};

WorstCaseConstant worst_case_constant(std::uint32_t d);

inline constexpr std::string_view kCsvHeader =
    "algorithm,n_elements,range_lo,range_hi,cd,trial,seconds,extraction_cost";

std::string emit_csv(std::span<const BenchRecord> records);
std::vector<BenchRecord> parse_csv(std::string_view csv);

}  // namespace recsort::bench
