#include "recsort/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <map>

#include "recsort/baselines.hpp"
#include "recsort/sort.hpp"
#include "recsort/splitmix64.hpp"

namespace recsort::bench {

namespace {

using Clock = std::chrono::steady_clock;

template <class T>
inline void do_not_optimize(const T& value) {
  asm volatile("" : : "r,m"(value) : "memory");
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

struct ScaledBounds {
  std::int64_t lo;  // smallest admissible mantissa
  std::int64_t hi;  // one past the largest
};

// Maps [range_lo, range_hi) onto the cd-place mantissa grid.
ScaledBounds scaled_bounds(double lo, double hi, std::uint32_t cd) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    fail(errc::invalid_range, "range bounds must be finite with lo < hi");
  }
  if (lo < 0.0) {
    fail(errc::invalid_range, "negative ranges are not supported");
  }
  if (cd > 18) {
    fail(errc::invalid_range, "more than 18 fractional digits");
  }
  const double p = static_cast<double>(checked_pow(10, cd));
  const auto lo_m = static_cast<std::int64_t>(std::ceil(lo * p - 1e-9));
  const auto hi_m = static_cast<std::int64_t>(std::ceil(hi * p - 1e-9));
  if (hi_m <= lo_m) {
    fail(errc::invalid_range, "no representable values in the range at cd=" +
                                  std::to_string(cd));
  }
  return ScaledBounds{lo_m, hi_m};
}

// (10^m - 1) / 9: the column count contributed by m stacked prefix levels.
std::uint64_t repunit(std::uint32_t m) {
  std::uint64_t r = 0;
  for (std::uint32_t i = 0; i < m; ++i) r = r * 10 + 1;
  return r;
}

KeySpec case_key_spec(const CaseSpec& c, std::uint64_t max_cells) {
  const ScaledBounds b = scaled_bounds(c.range_lo, c.range_hi, c.cd);
  const std::uint64_t max_mantissa = static_cast<std::uint64_t>(b.hi - 1);
  const std::uint32_t integer_digits =
      decimal_digit_count(max_mantissa / checked_pow(10, c.cd));
  return make_key_spec(10, integer_digits + c.cd, integer_digits, max_cells);
}

}  // namespace

std::vector<std::string> generate(const DatasetSpec& spec) {
  const ScaledBounds b = scaled_bounds(spec.range_lo, spec.range_hi, spec.cd);
  const auto span = static_cast<double>(b.hi - b.lo);

  Splitmix64 rng(spec.seed);
  std::vector<std::string> out;
  out.reserve(spec.n_elements);
  for (std::size_t i = 0; i < spec.n_elements; ++i) {
    auto offset = static_cast<std::int64_t>(rng.next_unit() * span);
    std::int64_t m = b.lo + offset;
    if (m >= b.hi) m = b.hi - 1;  // fp edge of u*span
    out.push_back(format_scaled_decimal(static_cast<std::uint64_t>(m), spec.cd));
  }
  return out;
}

std::string case_label(const CaseSpec& c) {
  return "(" + format_double(c.range_lo) + "," + format_double(c.range_hi) +
         ") cd=" + std::to_string(c.cd);
}

std::vector<CaseSpec> reference_cases() {
  return {
      CaseSpec{1.0, 10.0, 0},  CaseSpec{1.0, 10.0, 1}, CaseSpec{1.0, 10.0, 2},
      CaseSpec{1.0, 100.0, 0}, CaseSpec{1.0, 100.0, 1},
  };
}

KeyShape describe(const CaseSpec& c) {
  const ScaledBounds b = scaled_bounds(c.range_lo, c.range_hi, c.cd);
  const std::uint64_t max_mantissa = static_cast<std::uint64_t>(b.hi - 1);
  const std::uint32_t integer_digits =
      decimal_digit_count(max_mantissa / checked_pow(10, c.cd));
  const std::uint32_t n = integer_digits + c.cd;

  KeyShape shape;
  shape.total_digits = n;
  shape.integer_digits = integer_digits;
  shape.cell_count = checked_pow(10, n);
  shape.count_dims = "10";
  for (std::uint32_t i = 1; i < n; ++i) shape.count_dims += "x10";
  if (n == 1) {
    shape.h_min_dims = "2";
    shape.h_max_dims = "1";
  } else {
    shape.h_min_dims = "10x" + std::to_string(2 * repunit(n - 1));
    shape.h_max_dims = "10x" + std::to_string(repunit(n - 1));
  }
  return shape;
}

std::string_view algorithm_name(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::recombinant: return "recombinant";
    case Algorithm::counting: return "counting";
    case Algorithm::radix: return "radix";
    case Algorithm::bucket: return "bucket";
    case Algorithm::oracle: return "oracle";
  }
  return "unknown";
}

Algorithm algorithm_from_name(std::string_view name) {
  if (name == "recombinant") return Algorithm::recombinant;
  if (name == "counting") return Algorithm::counting;
  if (name == "radix") return Algorithm::radix;
  if (name == "bucket") return Algorithm::bucket;
  if (name == "oracle") return Algorithm::oracle;
  fail(errc::invalid_argument, "unknown algorithm '" + std::string(name) + "'");
}

std::vector<BenchRecord> run_matrix(const MatrixOptions& options) {
  std::vector<BenchRecord> records;
  for (std::size_t case_idx = 0; case_idx < options.cases.size(); ++case_idx) {
    const CaseSpec& c = options.cases[case_idx];
    case_key_spec(c, options.max_cells);  // budget gate before any work
    const std::uint64_t case_seed = splitmix64_mix(options.seed, case_idx);

    for (std::size_t size_idx = 0; size_idx < options.sizes.size(); ++size_idx) {
      DatasetSpec ds;
      ds.n_elements = options.sizes[size_idx];
      ds.range_lo = c.range_lo;
      ds.range_hi = c.range_hi;
      ds.cd = c.cd;
      ds.seed = splitmix64_mix(case_seed, size_idx);
      const std::vector<std::string> data = generate(ds);

      // Pre-converted inputs for the baselines; conversion stays untimed.
      const NormalizedDataset norm = normalize_dataset(data, options.max_cells);
      std::vector<std::uint64_t> mantissas;
      std::vector<double> doubles;
      mantissas.reserve(norm.keys.size());
      doubles.reserve(norm.keys.size());
      const auto scale_div =
          static_cast<double>(checked_pow(10, norm.spec.scale()));
      for (const DigitKey& k : norm.keys) {
        mantissas.push_back(k.key);
        doubles.push_back(static_cast<double>(k.key) / scale_div);
      }
      const std::uint64_t counting_bound = norm.spec.cell_count();
      const std::size_t bucket_count = std::max<std::size_t>(ds.n_elements, 1);

      for (Algorithm alg : options.algorithms) {
        if (options.trials == 0) continue;
        std::optional<std::uint64_t> cost;
        const auto run_once = [&]() {
          switch (alg) {
            case Algorithm::recombinant: {
              auto r = sort_decimal_keys(data, options.max_cells);
              cost = r.report.cells_traversed;
              do_not_optimize(r.keys.data());
              break;
            }
            case Algorithm::counting: {
              auto r = baselines::counting_sort(mantissas, counting_bound,
                                                options.max_cells);
              do_not_optimize(r.data());
              break;
            }
            case Algorithm::radix: {
              auto r = baselines::radix_sort_lsd(mantissas);
              do_not_optimize(r.data());
              break;
            }
            case Algorithm::bucket: {
              auto r = baselines::bucket_sort(doubles, ds.range_lo, ds.range_hi,
                                              bucket_count);
              do_not_optimize(r.data());
              break;
            }
            case Algorithm::oracle: {
              auto r = baselines::oracle_sort(doubles);
              do_not_optimize(r.data());
              break;
            }
          }
        };

        run_once();  // warm-up, untimed
        for (std::uint32_t trial = 0; trial < options.trials; ++trial) {
          const Clock::time_point start = Clock::now();
          run_once();
          const std::chrono::duration<double> elapsed = Clock::now() - start;
          BenchRecord record;
          record.algorithm = std::string(algorithm_name(alg));
          record.dataset = ds;
          record.trial = trial;
          record.elapsed_seconds = elapsed.count();
          if (alg == Algorithm::recombinant) record.extraction_cost = cost;
          records.push_back(std::move(record));
        }
      }
    }
  }
  return records;
}

ScalingReport fit_scaling(std::span<const BenchRecord> records) {
  if (records.empty()) {
    fail(errc::insufficient_data, "no records to fit");
  }
  const BenchRecord& first = records.front();
  std::map<std::size_t, std::pair<double, std::size_t>> by_size;
  for (const BenchRecord& r : records) {
    if (r.algorithm != first.algorithm ||
        r.dataset.range_lo != first.dataset.range_lo ||
        r.dataset.range_hi != first.dataset.range_hi ||
        r.dataset.cd != first.dataset.cd) {
      fail(errc::invalid_argument,
           "scaling fit needs records from a single algorithm and case");
    }
    auto& [sum, count] = by_size[r.dataset.n_elements];
    sum += r.elapsed_seconds;
    ++count;
  }
  if (by_size.size() < 3) {
    fail(errc::insufficient_data,
         "scaling fit needs at least 3 distinct sizes, got " +
             std::to_string(by_size.size()));
  }

  ScalingReport report;
  std::vector<double> xs, ys;
  for (const auto& [size, acc] : by_size) {
    const double mean = acc.first / static_cast<double>(acc.second);
    if (!(mean > 0.0)) {
      fail(errc::invalid_argument, "non-positive mean time at size " +
                                       std::to_string(size));
    }
    if (size == 0) {
      fail(errc::invalid_argument, "cannot fit log scaling at size 0");
    }
    report.mean_seconds.emplace_back(size, mean);
    xs.push_back(std::log10(static_cast<double>(size)));
    ys.push_back(std::log10(mean));
  }

  const auto n = static_cast<double>(xs.size());
  double x_bar = 0.0, y_bar = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    x_bar += xs[i];
    y_bar += ys[i];
  }
  x_bar /= n;
  y_bar /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - x_bar) * (xs[i] - x_bar);
    sxy += (xs[i] - x_bar) * (ys[i] - y_bar);
    syy += (ys[i] - y_bar) * (ys[i] - y_bar);
  }
  report.slope = sxy / sxx;
  report.intercept = y_bar - report.slope * x_bar;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double fit = report.intercept + report.slope * xs[i];
    ss_res += (ys[i] - fit) * (ys[i] - fit);
  }
  report.r_squared = syy == 0.0 ? 1.0 : 1.0 - ss_res / syy;

  for (std::uint32_t d = 1; d <= 10; ++d) {
    report.constant_table.emplace_back(d, worst_case_constant(d).value());
  }
  return report;
}

bool WorstCaseConstant::below_squared_bound() const noexcept {
  // numerator/denominator < (10 d)^2 with denominator == d, exactly.
  const std::uint64_t d = denominator;
  return numerator < 100 * d * d * d;
}

WorstCaseConstant worst_case_constant(std::uint32_t d) {
  if (d < 1 || d > 19) {
    fail(errc::invalid_argument, "d must be in [1, 19]");
  }
  return WorstCaseConstant{checked_pow(10, d - 1) + d, d};
}

std::string emit_csv(std::span<const BenchRecord> records) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const BenchRecord& r : records) {
    out += r.algorithm;
    out += ',';
    out += std::to_string(r.dataset.n_elements);
    out += ',';
    out += format_double(r.dataset.range_lo);
    out += ',';
    out += format_double(r.dataset.range_hi);
    out += ',';
    out += std::to_string(r.dataset.cd);
    out += ',';
    out += std::to_string(r.trial);
    out += ',';
    out += format_double(r.elapsed_seconds);
    out += ',';
    if (r.extraction_cost) out += std::to_string(*r.extraction_cost);
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

template <class T>
T parse_field(std::string_view text, std::size_t line_no, const char* what) {
  T value{};
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    fail(errc::parse_error, "line " + std::to_string(line_no) + ": bad " +
                                what + " field '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::vector<BenchRecord> parse_csv(std::string_view csv) {
  std::vector<std::string_view> lines = split(csv, '\n');
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty() || lines.front() != kCsvHeader) {
    fail(errc::parse_error, "missing or malformed CSV header");
  }

  std::vector<BenchRecord> records;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::vector<std::string_view> fields = split(lines[i], ',');
    if (fields.size() != 8) {
      fail(errc::parse_error, "line " + std::to_string(i + 1) + ": expected 8 fields, got " +
                                  std::to_string(fields.size()));
    }
    BenchRecord r;
    r.algorithm = std::string(fields[0]);
    r.dataset.n_elements = parse_field<std::size_t>(fields[1], i + 1, "n_elements");
    r.dataset.range_lo = parse_field<double>(fields[2], i + 1, "range_lo");
    r.dataset.range_hi = parse_field<double>(fields[3], i + 1, "range_hi");
    r.dataset.cd = parse_field<std::uint32_t>(fields[4], i + 1, "cd");
    r.trial = parse_field<std::uint32_t>(fields[5], i + 1, "trial");
    r.elapsed_seconds = parse_field<double>(fields[6], i + 1, "seconds");
    if (!fields[7].empty()) {
      r.extraction_cost = parse_field<std::uint64_t>(fields[7], i + 1, "extraction_cost");
    }
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace recsort::bench
