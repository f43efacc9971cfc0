#pragma once

#include <stdexcept>
#include <string>

namespace recsort {

// Failure categories surfaced to callers. Code-level handling switches on
// code(); the what() string is for humans.
enum class errc {
  parse_error,
  negative_value,
  non_finite,
  cell_budget_exceeded,
  symbol_out_of_alphabet,
  spec_mismatch,
  buffer_too_small,
  range_exceeded,
  out_of_range,
  invalid_range,
  insufficient_data,
  invalid_argument,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace recsort
