#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace natbdd {

/// Arbitrary-precision natural number. Truth tables, pair codes and ranks all
/// live here. Every public operation rejects negative values.
using Nat = mpz_class;

/// Number of variables of a boolean function.
using VarCount = unsigned;
/// Variable index in [0, VarCount).
using VarIndex = unsigned;

inline constexpr VarCount default_max_vars = 20;

/// Throws Error(negative_value) if n < 0.
void require_nat(const Nat& n, const char* what);

/// Number of significant bits; 0 for n == 0.
std::size_t bit_length(const Nat& n);

/// Nat with only bit `position` set.
Nat pow2(std::size_t position);

/// Parses a decimal or `0x`-prefixed hexadecimal natural number. No sign, no
/// surrounding whitespace.
Nat parse_nat(std::string_view text);

/// Decimal, or `0x`-prefixed lowercase hex when `hex` is set.
std::string format_nat(const Nat& n, bool hex = false);

}  // namespace natbdd
