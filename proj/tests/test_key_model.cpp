#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "recsort/key_model.hpp"
#include "test_util.hpp"

using namespace recsort;

namespace {

std::vector<std::uint64_t> raw_keys(const NormalizedDataset& norm) {
  std::vector<std::uint64_t> keys;
  keys.reserve(norm.keys.size());
  for (const DigitKey& k : norm.keys) keys.push_back(k.key);
  return keys;
}

}  // namespace

TEST_SUITE_BEGIN("key_model");

TEST_CASE("normalize_dataset maps the worked dataset to two-digit keys") {
  const std::vector<std::string> values{"4.5", "0.3", "2.3", "8.8", "7",
                                        "9.2", "4.5", "4.3", "8",   "3.2"};
  const NormalizedDataset norm = normalize_dataset(values);
  CHECK(norm.spec == KeySpec{10, 2, 1});
  CHECK(norm.spec.scale() == 1);
  CHECK(raw_keys(norm) ==
        std::vector<std::uint64_t>{45, 3, 23, 88, 70, 92, 45, 43, 80, 32});
}

TEST_CASE("normalize_dataset pads to the widest fractional part") {
  const std::vector<std::string> values{"1.01", "2.1", "1"};
  const NormalizedDataset norm = normalize_dataset(values);
  CHECK(norm.spec == KeySpec{10, 3, 1});
  CHECK(raw_keys(norm) == std::vector<std::uint64_t>{101, 210, 100});
}

TEST_CASE("normalize_dataset on empty input yields the degenerate spec") {
  const NormalizedDataset norm = normalize_dataset({});
  CHECK(norm.keys.empty());
  CHECK(norm.spec == KeySpec{10, 1, 1});
  CHECK(norm.spec.scale() == 0);
}

TEST_CASE("integer digit count follows the largest integer part") {
  const std::vector<std::string> values{"7", "10.0"};
  const NormalizedDataset norm = normalize_dataset(values);
  CHECK(norm.spec == KeySpec{10, 3, 2});
  CHECK(raw_keys(norm) == std::vector<std::uint64_t>{70, 100});
  CHECK(reconstruct_value(norm.keys[0]) == "7.0");
  CHECK(reconstruct_value(norm.keys[1]) == "10.0");
}

TEST_CASE("parse_decimal accepts the grammar") {
  CHECK(parse_decimal("5") == DecimalValue{5, 0});
  CHECK(parse_decimal(".5") == DecimalValue{5, 1});
  CHECK(parse_decimal("007.5") == DecimalValue{75, 1});
  CHECK(parse_decimal("0") == DecimalValue{0, 0});
  CHECK(parse_decimal("2.10") == DecimalValue{210, 2});
  CHECK(parse_decimal("007.5").integer_part() == 7);
}

TEST_CASE("parse_decimal rejects malformed numerals") {
  CHECK_FAILS_WITH(parse_decimal(""), errc::parse_error);
  CHECK_FAILS_WITH(parse_decimal("."), errc::parse_error);
  CHECK_FAILS_WITH(parse_decimal("5."), errc::parse_error);
  CHECK_FAILS_WITH(parse_decimal("1.2.3"), errc::parse_error);
  CHECK_FAILS_WITH(parse_decimal("+1"), errc::parse_error);
  CHECK_FAILS_WITH(parse_decimal("1e5"), errc::parse_error);
  CHECK_FAILS_WITH(parse_decimal(" 1"), errc::parse_error);
  CHECK_FAILS_WITH(parse_decimal("abc"), errc::parse_error);
  CHECK_FAILS_WITH(parse_decimal("-3"), errc::negative_value);
  CHECK_FAILS_WITH(parse_decimal("-0.0"), errc::negative_value);
}

TEST_CASE("float_to_decimal rounds the decimal numeral half-up") {
  CHECK(float_to_decimal(4.5, 1) == DecimalValue{45, 1});
  CHECK(float_to_decimal(0.0, 3) == DecimalValue{0, 3});
  // 2.345 as a double sits just below the numeral; the shortest-form rule
  // still rounds up at two places.
  CHECK(float_to_decimal(2.345, 2) == DecimalValue{235, 2});
  CHECK(float_to_decimal(0.285, 2) == DecimalValue{29, 2});
  CHECK(float_to_decimal(2.344, 2) == DecimalValue{234, 2});
  CHECK(float_to_decimal(7.0, 0) == DecimalValue{7, 0});
  CHECK_FAILS_WITH(float_to_decimal(-1.0, 2), errc::negative_value);
  CHECK_FAILS_WITH(float_to_decimal(std::nan(""), 1), errc::non_finite);
  CHECK_FAILS_WITH(float_to_decimal(std::numeric_limits<double>::infinity(), 1),
                   errc::non_finite);
}

TEST_CASE("digits_of decomposes most significant first") {
  const KeySpec spec{10, 2, 1};
  CHECK(digits_of(DigitKey{45, spec}) == std::vector<std::uint32_t>{4, 5});
  CHECK(digits_of(DigitKey{3, spec}) == std::vector<std::uint32_t>{0, 3});
  CHECK(digits_of(DigitKey{0, spec}) == std::vector<std::uint32_t>{0, 0});
}

TEST_CASE("digits_of is a bijection onto digit tuples") {
  const KeySpec spec{5, 4, 4};
  std::vector<std::vector<std::uint32_t>> seen;
  for (std::uint64_t key = 0; key < spec.cell_count(); ++key) {
    const auto digits = digits_of(DigitKey{key, spec});
    REQUIRE(digits.size() == 4);
    std::uint64_t recomposed = 0;
    for (std::uint32_t d : digits) {
      CHECK(d < spec.radix);
      recomposed = recomposed * spec.radix + d;
    }
    CHECK(recomposed == key);
    seen.push_back(digits);
  }
  std::sort(seen.begin(), seen.end());
  CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
}

TEST_CASE("reconstruct_value places the point after the integer digits") {
  const KeySpec spec{10, 2, 1};
  CHECK(reconstruct_value(45, spec) == "4.5");
  CHECK(reconstruct_value(3, spec) == "0.3");
  CHECK(reconstruct_value(0, spec) == "0.0");
  CHECK(reconstruct_value(7, KeySpec{10, 1, 1}) == "7");
  CHECK(reconstruct_value(105, KeySpec{10, 3, 1}) == "1.05");
}

TEST_CASE("rendering then re-parsing is the identity") {
  Splitmix64 rng(0x5eed);
  for (int i = 0; i < 2000; ++i) {
    const auto scale = static_cast<std::uint32_t>(test_util::rand_below(rng, 5));
    const std::uint64_t mantissa = test_util::rand_below(rng, 100000);
    const std::string text = format_scaled_decimal(mantissa, scale);
    const DecimalValue back = parse_decimal(text);
    CHECK(back.mantissa == mantissa);
    CHECK(back.scale == scale);
  }
}

TEST_CASE("key order embeds numeric order for decimals") {
  Splitmix64 rng(0xdec1);
  std::vector<std::string> values;
  for (int i = 0; i < 500; ++i) {
    values.push_back(format_scaled_decimal(test_util::rand_below(rng, 10000),
                                           2));
  }
  const NormalizedDataset norm = normalize_dataset(values);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t a = test_util::rand_below(rng, values.size());
    const std::size_t b = test_util::rand_below(rng, values.size());
    const double va = std::stod(values[a]);
    const double vb = std::stod(values[b]);
    CHECK((va <= vb) == (norm.keys[a].key <= norm.keys[b].key));
  }
}

TEST_CASE("strings_to_keys matches lexicographic order") {
  const Alphabet& az = Alphabet::lowercase();

  SUBCASE("worked examples") {
    const std::vector<std::string> values{"ba", "ab", "aa"};
    const NormalizedDataset norm = strings_to_keys(values, az);
    CHECK(norm.spec.radix == 27);
    CHECK(norm.spec.total_digits == 2);
    CHECK(norm.keys[2].key < norm.keys[1].key);  // aa < ab
    CHECK(norm.keys[1].key < norm.keys[0].key);  // ab < ba
  }
  SUBCASE("end padding keeps the prefix first") {
    const std::vector<std::string> values{"b", "ba"};
    const NormalizedDataset norm = strings_to_keys(values, az);
    CHECK(norm.keys[0].key < norm.keys[1].key);
  }
  SUBCASE("empty string maps to the all-pad key") {
    const std::vector<std::string> values{""};
    const NormalizedDataset norm = strings_to_keys(values, az);
    CHECK(norm.spec.total_digits == 1);
    CHECK(norm.keys[0].key == 0);
    CHECK(key_to_string(0, norm.spec, az).empty());
  }
  SUBCASE("random strings: key order equals lexicographic order") {
    const Alphabet abc("abc");
    Splitmix64 rng(0x57f);
    std::vector<std::string> values;
    for (int i = 0; i < 300; ++i) {
      values.push_back(test_util::random_string(rng, abc, 5));
    }
    const NormalizedDataset norm = strings_to_keys(values, abc);
    for (int i = 0; i < 3000; ++i) {
      const std::size_t a = test_util::rand_below(rng, values.size());
      const std::size_t b = test_util::rand_below(rng, values.size());
      CHECK((values[a] < values[b]) == (norm.keys[a].key < norm.keys[b].key));
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
      CHECK(key_to_string(norm.keys[i].key, norm.spec, abc) == values[i]);
    }
  }
}

TEST_CASE("alphabet validation") {
  CHECK_FAILS_WITH(Alphabet(""), errc::invalid_argument);
  CHECK_FAILS_WITH(Alphabet("aa"), errc::invalid_argument);
  const Alphabet& az = Alphabet::lowercase();
  CHECK(az.ordinal('a') == 1);
  CHECK(az.ordinal('z') == 26);
  CHECK_FAILS_WITH(az.ordinal('A'), errc::symbol_out_of_alphabet);
  CHECK_FAILS_WITH(strings_to_keys(std::vector<std::string>{"aZ"}, az),
                   errc::symbol_out_of_alphabet);
}

TEST_CASE("cell budget guards") {
  CHECK_FAILS_WITH(make_key_spec(10, 9, 9), errc::cell_budget_exceeded);
  CHECK(make_key_spec(10, 9, 9, 1'000'000'000).cell_count() == 1'000'000'000);
  CHECK_FAILS_WITH(normalize_dataset(std::vector<std::string>{"123456789012"}),
                   errc::cell_budget_exceeded);
  // length-6 lowercase strings need 27^6 cells, beyond the default budget
  CHECK_FAILS_WITH(
      strings_to_keys(std::vector<std::string>{"zzzzzz"}, Alphabet::lowercase()),
      errc::cell_budget_exceeded);
  CHECK_FAILS_WITH(parse_decimal("12345678901234567890123"),
                   errc::cell_budget_exceeded);
}

TEST_SUITE_END();
