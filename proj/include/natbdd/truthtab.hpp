#pragma once

#include <cstdint>
#include <vector>

#include "natbdd/nat.hpp"
#include "natbdd/pairing.hpp"

namespace natbdd {

class Bdd;

/// values[k] is the value of variable k.
using Assignment = std::vector<std::uint8_t>;

/// 2^(2^nv) - 1, the truth table of constant true.
/// Errc::resource_guard if nv > max_vars.
Nat all_ones_mask(VarCount nv, VarCount max_vars = default_max_vars);

/// Truth-table column of variable k among nv variables:
/// (2^(2^nv) - 1) / (2^(2^(nv-k-1)) + 1). The division is exact.
Nat var_tt(VarCount nv, VarIndex k, VarCount max_vars = default_max_vars);

/// Bitwise if-then-else, (x & (t ^ e)) ^ e.
Nat ite_tt(const Nat& x, const Nat& t, const Nat& e);

/// Splits a 2^nv-bit table into its high and low halves. `first` is the high
/// half shifted down, `second` the low half.
NatPair shannon_split(VarCount nv, const Nat& x, VarCount max_vars = default_max_vars);

/// hi * 2^(2^(nv-1)) + lo. Errc::overflow if either half is too wide.
Nat shannon_fuse(VarCount nv, const Nat& hi, const Nat& lo,
                 VarCount max_vars = default_max_vars);

// Row convention shared by the pointwise oracle. Row p of a 2^nv-bit table
// assigns variable k the complement of bit (nv-1-k) of p, which is the layout
// var_tt produces.
Assignment row_assignment(VarCount nv, std::uint64_t row);
std::uint64_t assignment_row(const Assignment& a);

/// Walks the tree one assignment at a time. Errc::index_out_of_range if the
/// assignment is shorter than the var-count.
bool semantic_eval(const Bdd& bdd, const Assignment& a);

/// Truth table assembled row by row from semantic_eval, independent of the
/// bitvector evaluator.
Nat truth_table_of(const Bdd& bdd, VarCount max_vars = default_max_vars);

}  // namespace natbdd
