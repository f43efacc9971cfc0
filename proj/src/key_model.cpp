#include "recsort/key_model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace recsort {

namespace {

constexpr std::uint64_t kMaxU64 = ~std::uint64_t{0};

std::uint64_t pow10_u64(std::uint32_t exp) { return checked_pow(10, exp); }

bool all_digits(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return c >= '0' && c <= '9'; });
}

// Appends decimal digits to an accumulator, failing over to the budget error:
// any value needing more than 19 digits exceeds every representable budget.
std::uint64_t accumulate_digits(std::uint64_t acc, std::string_view digits,
                                std::string_view original) {
  for (char c : digits) {
    const auto d = static_cast<std::uint64_t>(c - '0');
    if (acc > (kMaxU64 - d) / 10) {
      fail(errc::cell_budget_exceeded,
           "numeral '" + std::string(original) +
               "' has more digits than any cell budget admits");
    }
    acc = acc * 10 + d;
  }
  return acc;
}

}  // namespace

std::uint64_t checked_pow(std::uint64_t radix, std::uint32_t exp) {
  std::uint64_t result = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (result > kMaxU64 / radix) {
      fail(errc::cell_budget_exceeded,
           "key space " + std::to_string(radix) + "^" + std::to_string(exp) +
               " overflows 64 bits");
    }
    result *= radix;
  }
  return result;
}

std::uint32_t decimal_digit_count(std::uint64_t v) noexcept {
  std::uint32_t digits = 1;
  while (v >= 10) {
    v /= 10;
    ++digits;
  }
  return digits;
}

std::uint64_t DecimalValue::integer_part() const {
  return mantissa / pow10_u64(scale);
}

KeySpec make_key_spec(std::uint32_t radix, std::uint32_t total_digits,
                      std::uint32_t integer_digits, std::uint64_t max_cells) {
  if (radix < 2) fail(errc::invalid_argument, "radix must be at least 2");
  if (total_digits < 1) fail(errc::invalid_argument, "need at least one digit");
  if (integer_digits > total_digits) {
    fail(errc::invalid_argument, "integer digits exceed total digits");
  }
  const std::uint64_t cells = checked_pow(radix, total_digits);
  if (cells > max_cells) {
    fail(errc::cell_budget_exceeded,
         "key space needs " + std::to_string(cells) + " cells, budget is " +
             std::to_string(max_cells));
  }
  return KeySpec{radix, total_digits, integer_digits};
}

DecimalValue parse_decimal(std::string_view text) {
  if (text.empty()) fail(errc::parse_error, "empty numeral");
  if (text.front() == '-') {
    fail(errc::negative_value,
         "negative values are not supported: '" + std::string(text) + "'");
  }
  const std::size_t dot = text.find('.');
  std::string_view ipart = text.substr(0, dot);
  std::string_view fpart =
      dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (dot != std::string_view::npos && fpart.find('.') != std::string_view::npos) {
    fail(errc::parse_error, "multiple decimal points in '" + std::string(text) + "'");
  }
  if (dot != std::string_view::npos && fpart.empty()) {
    fail(errc::parse_error, "no digits after decimal point in '" + std::string(text) + "'");
  }
  if (ipart.empty() && fpart.empty()) {
    fail(errc::parse_error, "no digits in '" + std::string(text) + "'");
  }
  if (!all_digits(ipart) || !all_digits(fpart)) {
    fail(errc::parse_error, "invalid character in numeral '" + std::string(text) + "'");
  }
  std::uint64_t mantissa = accumulate_digits(0, ipart, text);
  mantissa = accumulate_digits(mantissa, fpart, text);
  return DecimalValue{mantissa, static_cast<std::uint32_t>(fpart.size())};
}

NormalizedDataset normalize_dataset(std::span<const std::string> values,
                                    std::uint64_t max_cells) {
  std::vector<DecimalValue> parsed;
  parsed.reserve(values.size());
  std::uint32_t scale = 0;
  std::uint64_t max_integer = 0;
  for (const std::string& text : values) {
    DecimalValue v = parse_decimal(text);
    scale = std::max(scale, v.scale);
    max_integer = std::max(max_integer, v.integer_part());
    parsed.push_back(v);
  }
  if (values.empty()) {
    return NormalizedDataset{{}, make_key_spec(10, 1, 1, max_cells)};
  }
  const std::uint32_t integer_digits = decimal_digit_count(max_integer);
  const KeySpec spec =
      make_key_spec(10, integer_digits + scale, integer_digits, max_cells);

  NormalizedDataset out;
  out.spec = spec;
  out.keys.reserve(parsed.size());
  for (const DecimalValue& v : parsed) {
    out.keys.push_back(DigitKey{v.mantissa * pow10_u64(scale - v.scale), spec});
  }
  return out;
}

DecimalValue float_to_decimal(double x, std::uint32_t scale) {
  if (std::isnan(x) || std::isinf(x)) {
    fail(errc::non_finite, "value is not finite");
  }
  if (x < 0.0) {
    fail(errc::negative_value, "negative values are not supported");
  }
  if (std::signbit(x)) x = 0.0;  // normalize -0.0
  // Shortest fixed decimal form that round-trips to x; rounding that numeral
  // half-up at `scale` places keeps 2.345 -> 235 even though the nearest
  // double sits just below 2.345.
  char buf[512];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed);
  if (res.ec != std::errc{}) fail(errc::non_finite, "value is not representable");
  const DecimalValue exact = parse_decimal({buf, res.ptr});

  if (exact.scale <= scale) {
    return DecimalValue{exact.mantissa * pow10_u64(scale - exact.scale), scale};
  }
  const std::uint64_t divisor = pow10_u64(exact.scale - scale);
  std::uint64_t mantissa = exact.mantissa / divisor;
  if (exact.mantissa % divisor >= divisor / 2) ++mantissa;  // half rounds up
  return DecimalValue{mantissa, scale};
}

std::vector<std::uint32_t> digits_of(const DigitKey& k) {
  std::vector<std::uint32_t> digits(k.spec.total_digits);
  std::uint64_t rest = k.key;
  for (std::uint32_t i = k.spec.total_digits; i-- > 0;) {
    digits[i] = static_cast<std::uint32_t>(rest % k.spec.radix);
    rest /= k.spec.radix;
  }
  return digits;
}

std::string format_scaled_decimal(std::uint64_t mantissa, std::uint32_t scale) {
  const std::uint64_t p = pow10_u64(scale);
  std::string out = std::to_string(mantissa / p);
  if (scale > 0) {
    std::string frac = std::to_string(mantissa % p);
    out += '.';
    out.append(scale - frac.size(), '0');
    out += frac;
  }
  return out;
}

std::string reconstruct_value(std::uint64_t key, const KeySpec& spec) {
  return format_scaled_decimal(key, spec.scale());
}

std::string reconstruct_value(const DigitKey& k) {
  return reconstruct_value(k.key, k.spec);
}

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  if (symbols.empty()) fail(errc::invalid_argument, "alphabet is empty");
  if (symbols.size() > 0xFFFE) fail(errc::invalid_argument, "alphabet too large");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const auto c = static_cast<unsigned char>(symbols_[i]);
    if (ordinal_of_[c] != 0) {
      fail(errc::invalid_argument,
           std::string("duplicate symbol '") + symbols_[i] + "' in alphabet");
    }
    ordinal_of_[c] = static_cast<std::uint16_t>(i + 1);
  }
}

const Alphabet& Alphabet::lowercase() {
  static const Alphabet a("abcdefghijklmnopqrstuvwxyz");
  return a;
}

std::uint32_t Alphabet::ordinal(unsigned char c) const {
  const std::uint16_t ord = ordinal_of_[c];
  if (ord == 0) {
    fail(errc::symbol_out_of_alphabet,
         std::string("symbol '") + static_cast<char>(c) + "' is not in the alphabet");
  }
  return ord;
}

char Alphabet::symbol(std::uint32_t ordinal) const {
  if (ordinal == 0 || ordinal > symbols_.size()) {
    fail(errc::symbol_out_of_alphabet,
         "ordinal " + std::to_string(ordinal) + " has no symbol");
  }
  return symbols_[ordinal - 1];
}

NormalizedDataset strings_to_keys(std::span<const std::string> values,
                                  const Alphabet& alphabet,
                                  std::uint64_t max_cells) {
  std::size_t width = 1;
  for (const std::string& v : values) width = std::max(width, v.size());
  const auto total_digits = static_cast<std::uint32_t>(width);
  const KeySpec spec =
      make_key_spec(alphabet.radix(), total_digits, total_digits, max_cells);

  NormalizedDataset out;
  out.spec = spec;
  out.keys.reserve(values.size());
  for (const std::string& v : values) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < width; ++i) {
      const std::uint32_t ord =
          i < v.size() ? alphabet.ordinal(static_cast<unsigned char>(v[i])) : 0;
      key = key * spec.radix + ord;
    }
    out.keys.push_back(DigitKey{key, spec});
  }
  return out;
}

std::string key_to_string(std::uint64_t key, const KeySpec& spec,
                          const Alphabet& alphabet) {
  std::vector<std::uint32_t> ordinals(spec.total_digits);
  std::uint64_t rest = key;
  for (std::uint32_t i = spec.total_digits; i-- > 0;) {
    ordinals[i] = static_cast<std::uint32_t>(rest % spec.radix);
    rest /= spec.radix;
  }
  std::size_t length = ordinals.size();
  while (length > 0 && ordinals[length - 1] == 0) --length;
  std::string out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) out += alphabet.symbol(ordinals[i]);
  return out;
}

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::parse_error: return "parse_error";
    case errc::negative_value: return "negative_value";
    case errc::non_finite: return "non_finite";
    case errc::cell_budget_exceeded: return "cell_budget_exceeded";
    case errc::symbol_out_of_alphabet: return "symbol_out_of_alphabet";
    case errc::spec_mismatch: return "spec_mismatch";
    case errc::buffer_too_small: return "buffer_too_small";
    case errc::range_exceeded: return "range_exceeded";
    case errc::out_of_range: return "out_of_range";
    case errc::invalid_range: return "invalid_range";
    case errc::insufficient_data: return "insufficient_data";
    case errc::invalid_argument: return "invalid_argument";
  }
  return "unknown";
}

}  // namespace recsort
