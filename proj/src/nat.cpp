#include "natbdd/nat.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "natbdd/error.hpp"

namespace natbdd {

void require_nat(const Nat& n, const char* what) {
  if (sgn(n) < 0) {
    throw Error(Errc::negative_value, std::string(what) + " must be a natural number");
  }
}

std::size_t bit_length(const Nat& n) {
  if (sgn(n) == 0) return 0;
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

Nat pow2(std::size_t position) {
  Nat r;
  mpz_setbit(r.get_mpz_t(), position);
  return r;
}

Nat parse_nat(std::string_view text) {
  int base = 10;
  std::string_view digits = text;
  if (digits.size() > 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X')) {
    base = 16;
    digits.remove_prefix(2);
  }
  auto valid = [base](unsigned char c) {
    return base == 16 ? std::isxdigit(c) != 0 : std::isdigit(c) != 0;
  };
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), valid)) {
    throw Error(Errc::parse_error, "not a natural number: '" + std::string(text) + "'");
  }
  return Nat(std::string(digits), base);
}

std::string format_nat(const Nat& n, bool hex) {
  return hex ? "0x" + n.get_str(16) : n.get_str(10);
}

}  // namespace natbdd
