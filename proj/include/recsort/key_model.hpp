#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "recsort/error.hpp"

namespace recsort {

// Default ceiling on radix^total_digits. Exceeding it raises
// errc::cell_budget_exceeded instead of attempting a huge allocation.
inline constexpr std::uint64_t kDefaultCellBudget = 100'000'000;

// radix^exp, or errc::cell_budget_exceeded if it does not fit in 64 bits.
std::uint64_t checked_pow(std::uint64_t radix, std::uint32_t exp);

// Number of base-10 digits of v (1 for v == 0).
std::uint32_t decimal_digit_count(std::uint64_t v) noexcept;

// A non-negative decimal as mantissa * 10^-scale.
struct DecimalValue {
  std::uint64_t mantissa = 0;
  std::uint32_t scale = 0;

  std::uint64_t integer_part() const;
  bool operator==(const DecimalValue&) const = default;
};

// Geometry of a key space: radix^total_digits cells, with the decimal point
// (for numeric specs) after integer_digits digits.
struct KeySpec {
  std::uint32_t radix = 10;
  std::uint32_t total_digits = 1;
  std::uint32_t integer_digits = 1;

  std::uint32_t scale() const noexcept { return total_digits - integer_digits; }
  std::uint64_t cell_count() const { return checked_pow(radix, total_digits); }
  std::uint64_t suffix_modulus() const {
    return checked_pow(radix, total_digits - 1);
  }
  bool operator==(const KeySpec&) const = default;
};

// Validates the geometry against the cell budget.
KeySpec make_key_spec(std::uint32_t radix, std::uint32_t total_digits,
                      std::uint32_t integer_digits,
                      std::uint64_t max_cells = kDefaultCellBudget);

// A uniform-width key, always in [0, radix^total_digits) of its spec.
struct DigitKey {
  std::uint64_t key = 0;
  KeySpec spec;

  bool operator==(const DigitKey&) const = default;
};

struct NormalizedDataset {
  std::vector<DigitKey> keys;  // input order
  KeySpec spec;
};

// Parses one numeral: optional digits, optional single '.', digits.
// No sign, no exponent. A leading '-' raises errc::negative_value.
DecimalValue parse_decimal(std::string_view text);

// Dataset-wide normalization: scale = max fractional digit count,
// integer_digits = digit count of the largest integer part (min 1), and each
// value's key is its mantissa zero-padded to the common scale.
NormalizedDataset normalize_dataset(std::span<const std::string> values,
                                    std::uint64_t max_cells = kDefaultCellBudget);

// Adapter for callers holding binary floats: rounds the value's shortest
// round-trip decimal form half-up at `scale` fractional places.
DecimalValue float_to_decimal(double x, std::uint32_t scale);

// Digit decomposition, most significant first; exactly total_digits entries.
std::vector<std::uint32_t> digits_of(const DigitKey& k);

// Renders a key as a numeral with the decimal point after integer_digits
// digits; scale() == 0 yields no point. Radix-10 specs only.
std::string reconstruct_value(std::uint64_t key, const KeySpec& spec);
std::string reconstruct_value(const DigitKey& k);

// mantissa * 10^-scale as text, fractional part zero-padded to scale digits.
std::string format_scaled_decimal(std::uint64_t mantissa, std::uint32_t scale);

// An ordered set of distinct symbols. Ordinal 0 is reserved for the
// end-of-string pad, so radix() == size() + 1.
class Alphabet {
 public:
  explicit Alphabet(std::string_view symbols);

  static const Alphabet& lowercase();  // a-z

  std::uint32_t radix() const noexcept {
    return static_cast<std::uint32_t>(symbols_.size()) + 1;
  }
  std::string_view symbols() const noexcept { return symbols_; }
  bool contains(unsigned char c) const noexcept { return ordinal_of_[c] != 0; }

  // 1-based ordinal; raises errc::symbol_out_of_alphabet for unknown bytes.
  std::uint32_t ordinal(unsigned char c) const;

  // Inverse of ordinal() for ordinals in [1, radix()).
  char symbol(std::uint32_t ordinal) const;

 private:
  std::string symbols_;
  std::array<std::uint16_t, 256> ordinal_of_{};
};

// Fixed-width string keys: total_digits = longest input (min 1), shorter
// strings end-padded with ordinal 0. Key order equals byte-lexicographic
// order of the inputs.
NormalizedDataset strings_to_keys(std::span<const std::string> values,
                                  const Alphabet& alphabet,
                                  std::uint64_t max_cells = kDefaultCellBudget);

// Decodes a key produced by strings_to_keys back to the unpadded string.
std::string key_to_string(std::uint64_t key, const KeySpec& spec,
                          const Alphabet& alphabet);

}  // namespace recsort
