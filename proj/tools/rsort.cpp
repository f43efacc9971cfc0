#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "recsort/baselines.hpp"
#include "recsort/bench.hpp"
#include "recsort/sort.hpp"

namespace {

using recsort::Alphabet;
using recsort::errc;
using recsort::Error;
using recsort::KeySpec;
namespace bench = recsort::bench;
namespace baselines = recsort::baselines;

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> read_input(const std::string& path) {
  if (path.empty() || path == "-") return read_lines(std::cin);
  std::ifstream file(path);
  if (!file) {
    recsort::fail(errc::invalid_argument, "cannot open input file '" + path + "'");
  }
  return read_lines(file);
}

std::uint64_t cell_budget_from_env() {
  if (const char* env = std::getenv("RSORT_MAX_CELLS")) {
    std::uint64_t value = 0;
    const std::string_view text(env);
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || value == 0) {
      recsort::fail(errc::invalid_argument,
                    "RSORT_MAX_CELLS must be a positive integer, got '" +
                        std::string(text) + "'");
    }
    return value;
  }
  return recsort::kDefaultCellBudget;
}

std::int64_t parse_int_line(const std::string& line) {
  if (!line.empty() && line.front() == '-') {
    recsort::fail(errc::negative_value,
                  "negative values are not supported: '" + line + "'");
  }
  std::int64_t value = 0;
  const auto res = std::from_chars(line.data(), line.data() + line.size(), value);
  if (res.ec != std::errc{} || res.ptr != line.data() + line.size()) {
    recsort::fail(errc::parse_error, "invalid integer '" + line + "'");
  }
  return value;
}

template <class T>
std::vector<T> parse_list(const std::string& text, const char* what) {
  std::vector<T> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    T value{};
    const auto res = std::from_chars(item.data(), item.data() + item.size(), value);
    if (res.ec != std::errc{} || res.ptr != item.data() + item.size()) {
      recsort::fail(errc::invalid_argument,
                    std::string("invalid ") + what + " '" + item + "'");
    }
    values.push_back(value);
  }
  if (values.empty()) {
    recsort::fail(errc::invalid_argument, std::string("empty ") + what + " list");
  }
  return values;
}

std::pair<double, double> parse_range(const std::string& text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos) {
    recsort::fail(errc::invalid_argument,
                  "range must be lo:hi, got '" + text + "'");
  }
  const auto parse_part = [&](std::string_view part) {
    double value = 0.0;
    const auto res = std::from_chars(part.data(), part.data() + part.size(), value);
    if (res.ec != std::errc{} || res.ptr != part.data() + part.size()) {
      recsort::fail(errc::invalid_argument,
                    "range must be lo:hi, got '" + text + "'");
    }
    return value;
  };
  return {parse_part(std::string_view(text).substr(0, colon)),
          parse_part(std::string_view(text).substr(colon + 1))};
}

struct SortOptions {
  std::string alg = "recombinant";
  std::string type = "decimal";
  std::string alphabet = "abcdefghijklmnopqrstuvwxyz";
  std::string input;
  std::uint64_t max_cells = 0;  // resolved after parsing (flag > env > default)
  bool report = false;
  bool raw = false;
};

void print_lines(const std::vector<std::string>& lines) {
  for (const std::string& line : lines) std::cout << line << '\n';
}

void print_report(const recsort::ExtractionReport& report) {
  std::cerr << "written=" << report.written
            << " cells_traversed=" << report.cells_traversed << '\n';
}

// Stable order of the original spellings by sort key.
template <class Key>
std::vector<std::string> originals_by_key(const std::vector<std::string>& lines,
                                          const std::vector<Key>& keys) {
  std::vector<std::size_t> order(lines.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<std::string> out;
  out.reserve(lines.size());
  for (std::size_t i : order) out.push_back(lines[i]);
  return out;
}

int run_sort(const SortOptions& opt) {
  const std::vector<std::string> lines = read_input(opt.input);
  const bench::Algorithm alg = bench::algorithm_from_name(opt.alg);
  std::optional<recsort::ExtractionReport> report;

  if (opt.type == "decimal") {
    const recsort::NormalizedDataset norm =
        recsort::normalize_dataset(lines, opt.max_cells);
    std::vector<std::uint64_t> keys;
    keys.reserve(norm.keys.size());
    for (const auto& k : norm.keys) keys.push_back(k.key);

    if (opt.raw) {
      print_lines(originals_by_key(lines, keys));
    } else {
      std::vector<std::uint64_t> sorted;
      switch (alg) {
        case bench::Algorithm::recombinant: {
          auto r = recsort::sort_decimal_keys(lines, opt.max_cells);
          report = r.report;
          sorted = std::move(r.keys);
          break;
        }
        case bench::Algorithm::counting:
          sorted = baselines::counting_sort(keys, norm.spec.cell_count(),
                                            opt.max_cells);
          break;
        case bench::Algorithm::radix:
          sorted = baselines::radix_sort_lsd(keys);
          break;
        case bench::Algorithm::bucket: {
          std::vector<double> as_double(keys.begin(), keys.end());
          const auto hi = static_cast<double>(norm.spec.cell_count());
          const auto sorted_d = baselines::bucket_sort(
              as_double, 0.0, hi, std::max<std::size_t>(keys.size(), 1));
          sorted.assign(sorted_d.begin(), sorted_d.end());
          break;
        }
        case bench::Algorithm::oracle:
          sorted = baselines::oracle_sort(keys);
          break;
      }
      for (std::uint64_t key : sorted) {
        std::cout << recsort::reconstruct_value(key, norm.spec) << '\n';
      }
    }
  } else if (opt.type == "int") {
    std::vector<std::int64_t> values;
    values.reserve(lines.size());
    for (const std::string& line : lines) values.push_back(parse_int_line(line));

    if (opt.raw) {
      print_lines(originals_by_key(lines, values));
    } else {
      std::vector<std::int64_t> sorted;
      switch (alg) {
        case bench::Algorithm::recombinant: {
          auto r = recsort::sort_integers(values, opt.max_cells);
          report = r.report;
          sorted = std::move(r.values);
          break;
        }
        case bench::Algorithm::counting: {
          std::vector<std::uint64_t> u(values.begin(), values.end());
          const std::uint64_t bound =
              values.empty() ? 1
                             : static_cast<std::uint64_t>(
                                   *std::max_element(values.begin(), values.end())) + 1;
          const auto s = baselines::counting_sort(u, bound, opt.max_cells);
          sorted.assign(s.begin(), s.end());
          break;
        }
        case bench::Algorithm::radix: {
          std::vector<std::uint64_t> u(values.begin(), values.end());
          const auto s = baselines::radix_sort_lsd(u);
          sorted.assign(s.begin(), s.end());
          break;
        }
        case bench::Algorithm::bucket: {
          std::vector<double> as_double(values.begin(), values.end());
          const double hi =
              values.empty() ? 1.0
                             : static_cast<double>(
                                   *std::max_element(values.begin(), values.end())) + 1.0;
          const auto s = baselines::bucket_sort(
              as_double, 0.0, hi, std::max<std::size_t>(values.size(), 1));
          sorted.assign(s.begin(), s.end());
          break;
        }
        case bench::Algorithm::oracle:
          sorted = baselines::oracle_sort(values);
          break;
      }
      for (std::int64_t v : sorted) std::cout << v << '\n';
    }
  } else if (opt.type == "string") {
    const Alphabet alphabet(opt.alphabet);
    switch (alg) {
      case bench::Algorithm::recombinant: {
        auto r = recsort::sort_strings(lines, alphabet, opt.max_cells);
        report = r.report;
        print_lines(r.values);
        break;
      }
      case bench::Algorithm::oracle:
        print_lines(baselines::oracle_sort(lines));
        break;
      default:
        recsort::fail(errc::invalid_argument,
                      "--alg " + opt.alg + " does not support --type string");
    }
  } else {
    recsort::fail(errc::invalid_argument, "unknown --type '" + opt.type + "'");
  }

  if (opt.report) {
    if (report) {
      print_report(*report);
    } else {
      std::cerr << "extraction report is only produced by --alg recombinant\n";
    }
  }
  return 0;
}

struct BenchOptions {
  std::string sizes = "10,100,1000,10000";
  std::vector<std::string> ranges;
  std::string cds = "0,1,2";
  std::string algs = "recombinant";
  std::uint32_t trials = 3;
  std::uint64_t seed = 42;
  std::string out;
  std::uint32_t max_case_digits = 3;
  std::uint64_t max_cells = 0;
};

int run_bench(const BenchOptions& opt) {
  bench::MatrixOptions matrix;
  matrix.sizes = parse_list<std::size_t>(opt.sizes, "size");
  matrix.trials = opt.trials;
  matrix.seed = opt.seed;
  matrix.max_cells = opt.max_cells;

  std::vector<std::string> ranges = opt.ranges;
  if (ranges.empty()) ranges = {"1:10", "1:100"};
  const std::vector<std::uint32_t> cds = parse_list<std::uint32_t>(opt.cds, "cd");

  std::stringstream algs(opt.algs);
  std::string alg_name;
  while (std::getline(algs, alg_name, ',')) {
    matrix.algorithms.push_back(bench::algorithm_from_name(alg_name));
  }
  if (matrix.algorithms.empty()) {
    recsort::fail(errc::invalid_argument, "empty --algs list");
  }

  for (const std::string& range : ranges) {
    const auto [lo, hi] = parse_range(range);
    for (std::uint32_t cd : cds) {
      const bench::CaseSpec c{lo, hi, cd};
      const bench::KeyShape shape = bench::describe(c);
      if (shape.total_digits > opt.max_case_digits) {
        std::cerr << "skipping case " << bench::case_label(c) << ": "
                  << shape.total_digits << " key digits exceed --max-case-digits "
                  << opt.max_case_digits << '\n';
        continue;
      }
      matrix.cases.push_back(c);
    }
  }
  if (matrix.cases.empty()) {
    recsort::fail(errc::invalid_argument, "no benchmark cases left to run");
  }

  for (const bench::CaseSpec& c : matrix.cases) {
    const bench::KeyShape shape = bench::describe(c);
    std::cout << "case " << bench::case_label(c) << ": count array "
              << shape.count_dims << ", H_Min " << shape.h_min_dims
              << ", H_Max " << shape.h_max_dims << '\n';
  }

  const std::vector<bench::BenchRecord> records = bench::run_matrix(matrix);

  if (!opt.out.empty()) {
    std::ofstream file(opt.out);
    if (!file) {
      recsort::fail(errc::invalid_argument, "cannot write '" + opt.out + "'");
    }
    file << bench::emit_csv(records);
  }

  // One summary block per algorithm: sizes down, cases across, mean seconds.
  for (bench::Algorithm alg : matrix.algorithms) {
    const std::string_view name = bench::algorithm_name(alg);
    std::cout << '\n' << name << " mean seconds\n";
    std::cout << "n_elements";
    for (const bench::CaseSpec& c : matrix.cases) {
      std::cout << '\t' << bench::case_label(c);
    }
    std::cout << '\n';
    for (std::size_t size : matrix.sizes) {
      std::cout << size;
      for (const bench::CaseSpec& c : matrix.cases) {
        double sum = 0.0;
        std::size_t count = 0;
        for (const bench::BenchRecord& r : records) {
          if (r.algorithm == name && r.dataset.n_elements == size &&
              r.dataset.range_lo == c.range_lo &&
              r.dataset.range_hi == c.range_hi && r.dataset.cd == c.cd) {
            sum += r.elapsed_seconds;
            ++count;
          }
        }
        char cell[32];
        if (count == 0) {
          std::snprintf(cell, sizeof cell, "-");
        } else {
          std::snprintf(cell, sizeof cell, "%.5f", sum / static_cast<double>(count));
        }
        std::cout << '\t' << cell;
      }
      std::cout << '\n';
    }
  }
  return 0;
}

struct AnalyzeOptions {
  std::string in;
  std::string plot_data;
};

int run_analyze(const AnalyzeOptions& opt) {
  std::ifstream file(opt.in);
  if (!file) {
    recsort::fail(errc::invalid_argument, "cannot open '" + opt.in + "'");
  }
  std::stringstream buffer;
  buffer << file.rdbuf();
  const std::vector<bench::BenchRecord> records = bench::parse_csv(buffer.str());

  // Group by (algorithm, case) in first-appearance order.
  struct Group {
    std::string algorithm;
    bench::CaseSpec c;
    std::vector<bench::BenchRecord> records;
  };
  std::vector<Group> groups;
  for (const bench::BenchRecord& r : records) {
    const bench::CaseSpec c{r.dataset.range_lo, r.dataset.range_hi, r.dataset.cd};
    auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& g) {
      return g.algorithm == r.algorithm && g.c == c;
    });
    if (it == groups.end()) {
      groups.push_back(Group{r.algorithm, c, {}});
      it = std::prev(groups.end());
    }
    it->records.push_back(r);
  }
  if (groups.empty()) {
    recsort::fail(errc::insufficient_data, "CSV has no data rows");
  }

  std::ofstream plot;
  if (!opt.plot_data.empty()) {
    plot.open(opt.plot_data);
    if (!plot) {
      recsort::fail(errc::invalid_argument, "cannot write '" + opt.plot_data + "'");
    }
  }

  for (const Group& g : groups) {
    const bench::ScalingReport report = bench::fit_scaling(g.records);
    char line[160];
    std::snprintf(line, sizeof line,
                  "%s %s: slope=%.4f intercept=%.4f R2=%.4f", g.algorithm.c_str(),
                  bench::case_label(g.c).c_str(), report.slope, report.intercept,
                  report.r_squared);
    std::cout << line << '\n';
    for (const auto& [size, mean] : report.mean_seconds) {
      std::snprintf(line, sizeof line, "  n=%zu mean=%.6g s", size, mean);
      std::cout << line << '\n';
    }
    if (plot.is_open()) {
      plot << "# algorithm=" << g.algorithm << " case=" << bench::case_label(g.c)
           << "\n# log10_n log10_seconds\n";
      for (const auto& [size, mean] : report.mean_seconds) {
        plot << std::log10(static_cast<double>(size)) << ' ' << std::log10(mean)
             << '\n';
      }
      plot << '\n';
    }
  }

  std::cout << "\nworst-case constant C = 1 + 10^(d-1)/d\n";
  for (std::uint32_t d = 1; d <= 10; ++d) {
    const bench::WorstCaseConstant c = bench::worst_case_constant(d);
    char line[96];
    std::snprintf(line, sizeof line, "  d=%-2u C=%.6g (%llu/%llu)", d, c.value(),
                  static_cast<unsigned long long>(c.numerator),
                  static_cast<unsigned long long>(c.denominator));
    std::cout << line << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"recombinant sort: count-space digit sorting and benchmarks"};
  app.require_subcommand(1);

  SortOptions sort_opt;
  CLI::App* sort_cmd =
      app.add_subcommand("sort", "sort newline-delimited values from a file or stdin");
  sort_cmd->add_option("--alg,-a", sort_opt.alg,
                       "recombinant|counting|radix|bucket|oracle")
      ->capture_default_str();
  sort_cmd->add_option("--type,-t", sort_opt.type, "decimal|int|string")
      ->capture_default_str();
  sort_cmd->add_option("--alphabet", sort_opt.alphabet,
                       "ordered symbol set for --type string")
      ->capture_default_str();
  sort_cmd->add_option("--in,-i", sort_opt.input, "input file (default stdin)");
  std::uint64_t sort_max_cells = 0;
  sort_cmd->add_option("--max-cells", sort_max_cells,
                       "cell budget override (also RSORT_MAX_CELLS)");
  sort_cmd->add_flag("--report", sort_opt.report,
                     "print the extraction report to stderr");
  sort_cmd->add_flag("--raw", sort_opt.raw,
                     "emit original spellings, ordered by sort key");

  BenchOptions bench_opt;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "run the timing matrix and emit CSV records");
  bench_cmd->add_option("--sizes", bench_opt.sizes, "comma list of element counts")
      ->capture_default_str();
  bench_cmd->add_option("--range", bench_opt.ranges,
                        "value range lo:hi (repeatable; default 1:10 and 1:100)");
  bench_cmd->add_option("--cd", bench_opt.cds, "comma list of fractional digit counts")
      ->capture_default_str();
  bench_cmd->add_option("--algs", bench_opt.algs, "comma list of algorithms")
      ->capture_default_str();
  bench_cmd->add_option("--trials", bench_opt.trials, "timed trials per cell")
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench_opt.seed, "base seed for dataset generation")
      ->capture_default_str();
  bench_cmd->add_option("--out", bench_opt.out, "CSV output path");
  bench_cmd->add_option("--max-case-digits", bench_opt.max_case_digits,
                        "skip range/cd cases wider than this many key digits")
      ->capture_default_str();
  std::uint64_t bench_max_cells = 0;
  bench_cmd->add_option("--max-cells", bench_max_cells,
                        "cell budget override (also RSORT_MAX_CELLS)");

  AnalyzeOptions analyze_opt;
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "fit log-log scaling over a bench CSV");
  analyze_cmd->add_option("--in", analyze_opt.in, "bench CSV path")->required();
  analyze_cmd->add_option("--plot-data", analyze_opt.plot_data,
                          "write plot-ready (log10 N, log10 t) data here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // --help is a success, bad flags a user error
  }

  try {
    const std::uint64_t env_budget = cell_budget_from_env();
    if (sort_cmd->parsed()) {
      sort_opt.max_cells = sort_max_cells != 0 ? sort_max_cells : env_budget;
      return run_sort(sort_opt);
    }
    if (bench_cmd->parsed()) {
      bench_opt.max_cells = bench_max_cells != 0 ? bench_max_cells : env_budget;
      return run_bench(bench_opt);
    }
    if (analyze_cmd->parsed()) {
      return run_analyze(analyze_opt);
    }
  } catch (const Error& e) {
    std::cerr << "rsort: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "rsort: internal error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
