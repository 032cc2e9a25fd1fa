#include <gtest/gtest.h>

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "natbdd/natbits.hpp"
#include "natbdd/pairing.hpp"

namespace {

using natbdd::BitList;
using natbdd::Nat;
using natbdd::NatPair;
using natbdd::PairScheme;

constexpr std::array kSchemes{PairScheme::cantor, PairScheme::pepis, PairScheme::bitmerge};

// Forward run of the three bitmix clauses on bit lists: take the head of the
// first list, then swap; an exhausted first list emits 0 if the second still
// has bits.
BitList bitmix(BitList xs, BitList ys) {
  BitList out;
  std::size_t i = 0, j = 0;
  while (i < xs.size() || j < ys.size()) {
    if (i < xs.size()) {
      out.push_back(xs[i++]);
    } else {
      out.push_back(0);
    }
    std::swap(xs, ys);
    std::swap(i, j);
  }
  return out;
}

Nat bitmix_pair(const Nat& x, const Nat& y) {
  return natbdd::from_rbits(bitmix(natbdd::to_rbits(x), natbdd::to_rbits(y)));
}

// Cantor oracle: walk the diagonals in order.
std::vector<std::pair<unsigned, unsigned>> cantor_walk(std::size_t count) {
  std::vector<std::pair<unsigned, unsigned>> walk;
  for (unsigned d = 0; walk.size() < count; ++d) {
    for (unsigned y = 0; y <= d && walk.size() < count; ++y) walk.emplace_back(d - y, y);
  }
  return walk;
}

TEST(Pairing, CantorExamples) {
  EXPECT_EQ(natbdd::cantor_pair(0, 0), 0);
  EXPECT_EQ(natbdd::cantor_pair(0, 1), 2);
  EXPECT_EQ(natbdd::cantor_pair(1, 2), 8);
  EXPECT_EQ(natbdd::cantor_unpair(0), (NatPair{0, 0}));
  EXPECT_EQ(natbdd::cantor_unpair(8), (NatPair{1, 2}));
}

TEST(Pairing, CantorMatchesDiagonalWalk) {
  const auto walk = cantor_walk(5000);
  for (std::size_t z = 0; z < walk.size(); ++z) {
    const auto [x, y] = walk[z];
    ASSERT_EQ(natbdd::cantor_pair(x, y), z);
    ASSERT_EQ(natbdd::cantor_unpair(z), (NatPair{x, y}));
  }
}

TEST(Pairing, CantorExactOnHugeValues) {
  const Nat z = natbdd::pow2(200);
  const NatPair p = natbdd::cantor_unpair(z);
  EXPECT_EQ(natbdd::cantor_pair(p.first, p.second), z);
  // Neighbours of a perfect triangular number are where floating point breaks.
  const Nat w = natbdd::pow2(300) + 12345;
  const Nat t = w * (w + 1) / 2;
  EXPECT_EQ(natbdd::cantor_unpair(t), (NatPair{w, 0}));
  EXPECT_EQ(natbdd::cantor_unpair(t - 1), (NatPair{0, w - 1}));
}

TEST(Pairing, PepisExamples) {
  EXPECT_EQ(natbdd::pepis_pair(1, 10), 41);
  EXPECT_EQ(natbdd::pepis_pair(0, 0), 0);
  EXPECT_EQ(natbdd::pepis_pair(2, 1), 11);
  EXPECT_EQ(natbdd::pepis_pair(10, 1), 3071);
  EXPECT_EQ(natbdd::pepis_unpair(41), (NatPair{1, 10}));
  EXPECT_EQ(natbdd::pepis_unpair(0), (NatPair{0, 0}));
  EXPECT_EQ(natbdd::pepis_unpair(10), (NatPair{0, 5}));
}

TEST(Pairing, PepisFindallListing) {
  const std::vector<int> expected{0, 2, 4, 6, 1, 5, 9, 13, 3, 11, 19, 27, 7, 23, 39, 55};
  std::vector<int> got;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) got.push_back(natbdd::pepis_pair(a, b).get_si());
  }
  EXPECT_EQ(got, expected);
}

TEST(Pairing, PepisAsymmetricGrowth) {
  for (unsigned x = 0; x < 32; ++x) {
    EXPECT_EQ(natbdd::pepis_pair(x + 1, 0) + 1, 2 * (natbdd::pepis_pair(x, 0) + 1));
  }
}

TEST(Pairing, BitmergeExamples) {
  EXPECT_EQ(natbdd::bitmerge_pair(60, 26), 2008);
  EXPECT_EQ(natbdd::bitmerge_pair(0, 0), 0);
  EXPECT_EQ(natbdd::bitmerge_pair(3, 0), 5);
  EXPECT_EQ(natbdd::bitmerge_unpair(2008), (NatPair{60, 26}));
  EXPECT_EQ(natbdd::bitmerge_unpair(10), (NatPair{0, 3}));
  EXPECT_EQ(natbdd::bitmerge_unpair(0), (NatPair{0, 0}));
}

TEST(Pairing, BitmergeUnpairTable) {
  const std::array<std::pair<int, int>, 16> table{{{0, 0}, {1, 0}, {0, 1}, {1, 1},
                                                   {2, 0}, {3, 0}, {2, 1}, {3, 1},
                                                   {0, 2}, {1, 2}, {0, 3}, {1, 3},
                                                   {2, 2}, {3, 2}, {2, 3}, {3, 3}}};
  for (int z = 0; z < 16; ++z) {
    EXPECT_EQ(natbdd::bitmerge_unpair(z), (NatPair{table[z].first, table[z].second})) << z;
  }
}

TEST(Pairing, BitmergeAgreesWithBitmixClauses) {
  for (unsigned x = 0; x < 128; ++x) {
    for (unsigned y = 0; y < 128; ++y) ASSERT_EQ(natbdd::bitmerge_pair(x, y), bitmix_pair(x, y));
  }
  std::mt19937_64 rng(20081);
  for (int trial = 0; trial < 200; ++trial) {
    Nat x, y;
    mpz_ui_pow_ui(x.get_mpz_t(), 3, rng() % 400);
    mpz_ui_pow_ui(y.get_mpz_t(), 7, rng() % 300);
    x += rng();
    ASSERT_EQ(natbdd::bitmerge_pair(x, y), bitmix_pair(x, y));
    ASSERT_EQ(natbdd::bitmerge_unpair(bitmix_pair(x, y)), (NatPair{x, y}));
  }
}

TEST(Pairing, BitLengthBound) {
  for (unsigned x = 0; x < 256; ++x) {
    for (unsigned y = 0; y < 256; ++y) {
      const std::size_t bound =
          2 * std::max(natbdd::bit_length(x), natbdd::bit_length(y));
      ASSERT_LE(natbdd::bit_length(natbdd::bitmerge_pair(x, y)), bound);
    }
  }
}

TEST(Pairing, RoundtripsForEveryScheme) {
  for (PairScheme scheme : kSchemes) {
    for (unsigned z = 0; z < (1u << 16); ++z) {
      const NatPair p = natbdd::unpair(scheme, z);
      ASSERT_EQ(natbdd::pair(scheme, p.first, p.second), z) << natbdd::to_string(scheme);
    }
    for (unsigned x = 0; x < 256; ++x) {
      for (unsigned y = 0; y < 256; ++y) {
        ASSERT_EQ(natbdd::unpair(scheme, natbdd::pair(scheme, x, y)), (NatPair{x, y}))
            << natbdd::to_string(scheme);
      }
    }
  }
}

TEST(Pairing, SchemeNames) {
  for (PairScheme scheme : kSchemes) {
    EXPECT_EQ(natbdd::parse_pair_scheme(natbdd::to_string(scheme)), scheme);
  }
  EXPECT_FALSE(natbdd::parse_pair_scheme("morton").has_value());
}

}  // namespace
