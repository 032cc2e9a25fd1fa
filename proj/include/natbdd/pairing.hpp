#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "natbdd/nat.hpp"

namespace natbdd {

/// Result of an unpairing: `first` and `second` satisfy pair(first, second) == z.
struct NatPair {
  Nat first;
  Nat second;

  friend bool operator==(const NatPair&, const NatPair&) = default;
};

enum class PairScheme { cantor, pepis, bitmerge };

std::string_view to_string(PairScheme scheme) noexcept;
std::optional<PairScheme> parse_pair_scheme(std::string_view name) noexcept;

// Cantor: ((x+y)(x+y+1))/2 + y. The inverse uses an exact integer square
// root, so it stays exact for arbitrarily large z.
Nat cantor_pair(const Nat& x, const Nat& y);
NatPair cantor_unpair(const Nat& z);

// Pepis-Kalmar: 2^x (2y+1) - 1. Grows exponentially in x.
Nat pepis_pair(const Nat& x, const Nat& y);
NatPair pepis_unpair(const Nat& z);

/// Bit interleaving: bit i of x lands at position 2i of the result and bit i
/// of y at position 2i+1.
Nat bitmerge_pair(const Nat& x, const Nat& y);
/// Even-position bits to `first`, odd-position bits to `second`.
NatPair bitmerge_unpair(const Nat& z);

Nat pair(PairScheme scheme, const Nat& x, const Nat& y);
NatPair unpair(PairScheme scheme, const Nat& z);

}  // namespace natbdd
