#include <gtest/gtest.h>

#include <cstdint>

#include "natbdd/error.hpp"
#include "natbdd/natbits.hpp"

namespace {

using natbdd::BitList;
using natbdd::Errc;
using natbdd::Error;
using natbdd::Nat;

// Positional-sum oracle on machine words.
std::uint64_t positional_sum(const BitList& bits) {
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) n += std::uint64_t{bits[i]} << i;
  return n;
}

// Repeated halving.
unsigned halvings(std::uint64_t n) {
  unsigned t = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++t;
  }
  return t;
}

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no natbdd::Error thrown";
  return Errc::parse_error;
}

TEST(NatBits, ToRbitsExamples) {
  EXPECT_EQ(natbdd::to_rbits(0), BitList{});
  EXPECT_EQ(natbdd::to_rbits(1), (BitList{1}));
  EXPECT_EQ(natbdd::to_rbits(6), (BitList{0, 1, 1}));
  EXPECT_EQ(positional_sum({0, 1, 1}), 6u);
}

TEST(NatBits, FromRbitsExamples) {
  EXPECT_EQ(natbdd::from_rbits({}), 0);
  EXPECT_EQ(natbdd::from_rbits({0, 1, 1}), 6);
  EXPECT_EQ(natbdd::from_rbits({1, 0, 0}), 1);
}

TEST(NatBits, FromRbitsRejectsNonBits) {
  EXPECT_EQ(code_of([] { natbdd::from_rbits({1, 2, 0}); }), Errc::invalid_bit);
}

TEST(NatBits, RoundtripAndCanonicalBelow2To16) {
  for (std::uint64_t n = 0; n < (1u << 16); ++n) {
    const BitList bits = natbdd::to_rbits(n);
    ASSERT_EQ(natbdd::from_rbits(bits), n);
    ASSERT_EQ(positional_sum(bits), n);
    if (n < (1u << 12)) {
      ASSERT_TRUE(bits.empty() || bits.back() == 1) << n;
    }
  }
}

TEST(NatBits, ExactOnWideValues) {
  const Nat big = natbdd::pow2(70000) + natbdd::pow2(65536) + 5;
  const BitList bits = natbdd::to_rbits(big);
  EXPECT_EQ(bits.size(), 70001u);
  EXPECT_EQ(natbdd::from_rbits(bits), big);
}

TEST(NatBits, ValuationExamples) {
  EXPECT_EQ(natbdd::two_adic_valuation(1), 0u);
  EXPECT_EQ(natbdd::two_adic_valuation(12), 2u);
  EXPECT_EQ(natbdd::two_adic_valuation(natbdd::pow2(40)), 40u);
  EXPECT_EQ(natbdd::odd_part(natbdd::pow2(40)), 1);
  EXPECT_EQ(natbdd::odd_part(1), 1);
  EXPECT_EQ(natbdd::odd_part(12), 3);
  EXPECT_EQ(natbdd::odd_part(42), 21);
}

TEST(NatBits, ValuationOfZeroIsAnError) {
  EXPECT_EQ(code_of([] { natbdd::two_adic_valuation(0); }), Errc::undefined_valuation);
  EXPECT_EQ(code_of([] { natbdd::odd_part(0); }), Errc::undefined_valuation);
}

TEST(NatBits, ValuationDecomposition) {
  for (std::uint64_t n = 1; n < 5000; ++n) {
    const std::size_t t = natbdd::two_adic_valuation(n);
    const Nat odd = natbdd::odd_part(n);
    ASSERT_EQ(t, halvings(n));
    ASSERT_EQ(natbdd::pow2(t) * odd, n);
    ASSERT_TRUE(mpz_odd_p(odd.get_mpz_t()));
  }
}

TEST(NatBits, NegativeInputsRejected) {
  EXPECT_EQ(code_of([] { natbdd::to_rbits(-1); }), Errc::negative_value);
}

TEST(NatBits, ParseAndFormat) {
  EXPECT_EQ(natbdd::parse_nat("2008"), 2008);
  EXPECT_EQ(natbdd::parse_nat("0x7d8"), 2008);
  EXPECT_EQ(natbdd::format_nat(2008, true), "0x7d8");
  EXPECT_EQ(natbdd::format_nat(0), "0");
  for (const char* bad : {"", "-1", "+3", "12a", "0x", " 1", "0xg"}) {
    EXPECT_EQ(code_of([&] { natbdd::parse_nat(bad); }), Errc::parse_error) << bad;
  }
}

}  // namespace
