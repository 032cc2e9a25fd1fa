#pragma once

#include <cstdint>
#include <vector>

#include "natbdd/nat.hpp"

namespace natbdd {

/// Bits least-significant first. The canonical form has no trailing zero, so
/// 0 is the empty list.
using BitList = std::vector<std::uint8_t>;

/// Canonical LSB-first binary expansion.
BitList to_rbits(const Nat& n);

/// Sum of bits[i] * 2^i. Trailing zeros are accepted; any element other than
/// 0 or 1 is an Errc::invalid_bit error.
Nat from_rbits(const BitList& bits);

/// Largest t with 2^t dividing n. Errc::undefined_valuation for n == 0.
std::size_t two_adic_valuation(const Nat& n);

/// n / 2^two_adic_valuation(n); always odd.
Nat odd_part(const Nat& n);

}  // namespace natbdd
