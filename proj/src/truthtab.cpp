#include "natbdd/truthtab.hpp"

#include <string>

#include "natbdd/bdd.hpp"
#include "natbdd/error.hpp"

namespace natbdd {

namespace {

void guard_vars(VarCount nv, VarCount max_vars) {
  if (nv > max_vars) {
    throw Error(Errc::resource_guard, "var-count " + std::to_string(nv) +
                                          " exceeds max_vars " + std::to_string(max_vars));
  }
}

bool fits_table(const Nat& x, VarCount nv) {
  return bit_length(x) <= (std::size_t{1} << nv);
}

}  // namespace

Nat all_ones_mask(VarCount nv, VarCount max_vars) {
  guard_vars(nv, max_vars);
  return pow2(std::size_t{1} << nv) - 1;
}

Nat var_tt(VarCount nv, VarIndex k, VarCount max_vars) {
  if (k >= nv) {
    throw Error(Errc::index_out_of_range, "variable " + std::to_string(k) +
                                              " out of range for " + std::to_string(nv) +
                                              " variables");
  }
  const Nat mask = all_ones_mask(nv, max_vars);
  const Nat divisor = pow2(std::size_t{1} << (nv - k - 1)) + 1;
  Nat column;
  mpz_divexact(column.get_mpz_t(), mask.get_mpz_t(), divisor.get_mpz_t());
  return column;
}

Nat ite_tt(const Nat& x, const Nat& t, const Nat& e) { return (x & (t ^ e)) ^ e; }

NatPair shannon_split(VarCount nv, const Nat& x, VarCount max_vars) {
  require_nat(x, "shannon_split table");
  if (nv == 0) throw Error(Errc::split_too_small, "cannot split a 1-bit truth table");
  guard_vars(nv, max_vars);
  if (!fits_table(x, nv)) {
    throw Error(Errc::table_out_of_range,
                "truth table wider than 2^" + std::to_string(nv) + " bits");
  }
  const std::size_t half = std::size_t{1} << (nv - 1);
  Nat hi, lo;
  mpz_tdiv_q_2exp(hi.get_mpz_t(), x.get_mpz_t(), half);
  mpz_tdiv_r_2exp(lo.get_mpz_t(), x.get_mpz_t(), half);
  return {std::move(hi), std::move(lo)};
}

Nat shannon_fuse(VarCount nv, const Nat& hi, const Nat& lo, VarCount max_vars) {
  require_nat(hi, "shannon_fuse high half");
  require_nat(lo, "shannon_fuse low half");
  if (nv == 0) throw Error(Errc::split_too_small, "cannot fuse into a 1-bit truth table");
  guard_vars(nv, max_vars);
  if (!fits_table(hi, nv - 1) || !fits_table(lo, nv - 1)) {
    throw Error(Errc::overflow,
                "shannon_fuse half wider than 2^" + std::to_string(nv - 1) + " bits");
  }
  Nat x;
  mpz_mul_2exp(x.get_mpz_t(), hi.get_mpz_t(), std::size_t{1} << (nv - 1));
  return x | lo;
}

Assignment row_assignment(VarCount nv, std::uint64_t row) {
  Assignment a(nv);
  for (VarIndex k = 0; k < nv; ++k) {
    a[k] = static_cast<std::uint8_t>(((row >> (nv - 1 - k)) & 1u) ^ 1u);
  }
  return a;
}

std::uint64_t assignment_row(const Assignment& a) {
  const std::size_t nv = a.size();
  std::uint64_t row = 0;
  for (std::size_t k = 0; k < nv; ++k) {
    if (a[k] == 0) row |= std::uint64_t{1} << (nv - 1 - k);
  }
  return row;
}

bool semantic_eval(const Bdd& bdd, const Assignment& a) {
  if (a.size() != bdd.vars()) {
    throw Error(Errc::index_out_of_range, "assignment has " + std::to_string(a.size()) +
                                              " values for " + std::to_string(bdd.vars()) +
                                              " variables");
  }
  const BddNode* node = &bdd.root();
  while (!node->is_leaf()) {
    const std::uint8_t value = a[node->var()];
    if (value > 1) throw Error(Errc::invalid_bit, "assignment value must be 0 or 1");
    node = value ? &node->then_branch() : &node->else_branch();
  }
  return node->bit();
}

Nat truth_table_of(const Bdd& bdd, VarCount max_vars) {
  const VarCount nv = bdd.vars();
  guard_vars(nv, max_vars);
  Nat tt;
  const std::uint64_t rows = std::uint64_t{1} << nv;
  for (std::uint64_t row = 0; row < rows; ++row) {
    if (semantic_eval(bdd, row_assignment(nv, row))) mpz_setbit(tt.get_mpz_t(), row);
  }
  return tt;
}

}  // namespace natbdd
