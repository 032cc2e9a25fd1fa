#include "natbdd/error.hpp"

namespace natbdd {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_bit: return "invalid bit";
    case Errc::undefined_valuation: return "undefined valuation";
    case Errc::negative_value: return "negative value";
    case Errc::resource_guard: return "resource guard";
    case Errc::index_out_of_range: return "index out of range";
    case Errc::table_out_of_range: return "truth table out of range";
    case Errc::split_too_small: return "split too small";
    case Errc::overflow: return "overflow";
    case Errc::malformed_bdd: return "malformed bdd";
    case Errc::out_of_image: return "out of image";
    case Errc::parse_error: return "parse error";
  }
  return "unknown error";
}

}  // namespace natbdd
