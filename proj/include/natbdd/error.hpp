#pragma once

#include <stdexcept>
#include <string>

namespace natbdd {

enum class Errc {
  invalid_bit,          // bitlist element outside {0,1}
  undefined_valuation,  // 2-adic valuation of zero
  negative_value,       // a Nat argument was negative
  resource_guard,       // var-count above the configured max_vars
  index_out_of_range,   // variable index >= var-count
  table_out_of_range,   // truth table does not fit in 2^(2^nv) bits
  split_too_small,      // Shannon split of a 1-bit table
  overflow,             // Shannon half wider than 2^(nv-1) bits
  malformed_bdd,        // structural invariant of a Bdd violated
  out_of_image,         // BDD is not in the range of the unranking
  parse_error,          // textual input could not be parsed
};

const char* to_string(Errc code) noexcept;

/// Domain error raised by every natbdd operation. The code distinguishes the
/// failure class; what() carries a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace natbdd
