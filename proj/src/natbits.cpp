#include "natbdd/natbits.hpp"

#include "natbdd/error.hpp"

namespace natbdd {

BitList to_rbits(const Nat& n) {
  require_nat(n, "to_rbits argument");
  const std::size_t len = bit_length(n);
  BitList bits(len);
  for (std::size_t i = 0; i < len; ++i) {
    bits[i] = static_cast<std::uint8_t>(mpz_tstbit(n.get_mpz_t(), i));
  }
  return bits;
}

Nat from_rbits(const BitList& bits) {
  Nat n;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    switch (bits[i]) {
      case 0: break;
      case 1: mpz_setbit(n.get_mpz_t(), i); break;
      default:
        throw Error(Errc::invalid_bit, "bit " + std::to_string(i) + " is " +
                                           std::to_string(bits[i]) + ", expected 0 or 1");
    }
  }
  return n;
}

std::size_t two_adic_valuation(const Nat& n) {
  require_nat(n, "two_adic_valuation argument");
  if (sgn(n) == 0) {
    throw Error(Errc::undefined_valuation, "2-adic valuation of 0 is undefined");
  }
  return mpz_scan1(n.get_mpz_t(), 0);
}

Nat odd_part(const Nat& n) {
  const std::size_t t = two_adic_valuation(n);
  Nat r;
  mpz_tdiv_q_2exp(r.get_mpz_t(), n.get_mpz_t(), t);
  return r;
}

}  // namespace natbdd
