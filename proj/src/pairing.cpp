#include "natbdd/pairing.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "natbdd/error.hpp"
#include "natbdd/natbits.hpp"

namespace natbdd {

namespace {

using Words = std::vector<std::uint64_t>;

Words to_words(const Nat& n) {
  const std::size_t count = (bit_length(n) + 63) / 64;
  Words words(count);
  if (count > 0) {
    std::size_t written = 0;
    mpz_export(words.data(), &written, -1, sizeof(std::uint64_t), 0, 0, n.get_mpz_t());
    words.resize(written);
  }
  return words;
}

Nat from_words(const Words& words) {
  Nat n;
  if (!words.empty()) {
    mpz_import(n.get_mpz_t(), words.size(), -1, sizeof(std::uint64_t), 0, 0, words.data());
  }
  return n;
}

// Moves bit i of a 32-bit value to bit 2i.
std::uint64_t spread(std::uint64_t x) {
  x &= 0x00000000FFFFFFFFull;
  x = (x | (x << 16)) & 0x0000FFFF0000FFFFull;
  x = (x | (x << 8)) & 0x00FF00FF00FF00FFull;
  x = (x | (x << 4)) & 0x0F0F0F0F0F0F0F0Full;
  x = (x | (x << 2)) & 0x3333333333333333ull;
  x = (x | (x << 1)) & 0x5555555555555555ull;
  return x;
}

// Inverse of spread: gathers the even bits of x into the low 32 bits.
std::uint64_t compact(std::uint64_t x) {
  x &= 0x5555555555555555ull;
  x = (x | (x >> 1)) & 0x3333333333333333ull;
  x = (x | (x >> 2)) & 0x0F0F0F0F0F0F0F0Full;
  x = (x | (x >> 4)) & 0x00FF00FF00FF00FFull;
  x = (x | (x >> 8)) & 0x0000FFFF0000FFFFull;
  x = (x | (x >> 16)) & 0x00000000FFFFFFFFull;
  return x;
}

Nat triangular(const Nat& w) { return w * (w + 1) / 2; }

}  // namespace

std::string_view to_string(PairScheme scheme) noexcept {
  switch (scheme) {
    case PairScheme::cantor: return "cantor";
    case PairScheme::pepis: return "pepis";
    case PairScheme::bitmerge: return "bitmerge";
  }
  return "?";
}

std::optional<PairScheme> parse_pair_scheme(std::string_view name) noexcept {
  if (name == "cantor") return PairScheme::cantor;
  if (name == "pepis") return PairScheme::pepis;
  if (name == "bitmerge") return PairScheme::bitmerge;
  return std::nullopt;
}

Nat cantor_pair(const Nat& x, const Nat& y) {
  require_nat(x, "cantor_pair x");
  require_nat(y, "cantor_pair y");
  return triangular(x + y) + y;
}

NatPair cantor_unpair(const Nat& z) {
  require_nat(z, "cantor_unpair argument");
  // w is the diagonal index: the largest w with w(w+1)/2 <= z.
  Nat root;
  const Nat disc = 8 * z + 1;
  mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
  const Nat w = (root - 1) / 2;
  Nat y = z - triangular(w);
  Nat x = w - y;
  return {std::move(x), std::move(y)};
}

Nat pepis_pair(const Nat& x, const Nat& y) {
  require_nat(x, "pepis_pair x");
  require_nat(y, "pepis_pair y");
  if (!x.fits_ulong_p() || x.get_ui() > std::numeric_limits<mp_bitcnt_t>::max() / 2) {
    throw Error(Errc::resource_guard, "pepis_pair exponent too large");
  }
  Nat r = 2 * y + 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), x.get_ui());
  return r - 1;
}

NatPair pepis_unpair(const Nat& z) {
  require_nat(z, "pepis_unpair argument");
  const Nat z1 = z + 1;
  Nat x = static_cast<unsigned long>(two_adic_valuation(z1));
  Nat y = (odd_part(z1) - 1) / 2;
  return {std::move(x), std::move(y)};
}

Nat bitmerge_pair(const Nat& x, const Nat& y) {
  require_nat(x, "bitmerge_pair x");
  require_nat(y, "bitmerge_pair y");
  const Words xs = to_words(x);
  const Words ys = to_words(y);
  const std::size_t n = std::max(xs.size(), ys.size());
  Words out(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t xw = i < xs.size() ? xs[i] : 0;
    const std::uint64_t yw = i < ys.size() ? ys[i] : 0;
    out[2 * i] = spread(xw) | (spread(yw) << 1);
    out[2 * i + 1] = spread(xw >> 32) | (spread(yw >> 32) << 1);
  }
  return from_words(out);
}

NatPair bitmerge_unpair(const Nat& z) {
  require_nat(z, "bitmerge_unpair argument");
  const Words zs = to_words(z);
  const std::size_t n = (zs.size() + 1) / 2;
  Words xs(n), ys(n);
  for (std::size_t i = 0; i < zs.size(); ++i) {
    const std::uint64_t xw = compact(zs[i]);
    const std::uint64_t yw = compact(zs[i] >> 1);
    const unsigned shift = (i % 2) * 32;
    xs[i / 2] |= xw << shift;
    ys[i / 2] |= yw << shift;
  }
  return {from_words(xs), from_words(ys)};
}

Nat pair(PairScheme scheme, const Nat& x, const Nat& y) {
  switch (scheme) {
    case PairScheme::cantor: return cantor_pair(x, y);
    case PairScheme::pepis: return pepis_pair(x, y);
    case PairScheme::bitmerge: return bitmerge_pair(x, y);
  }
  return {};
}

NatPair unpair(PairScheme scheme, const Nat& z) {
  switch (scheme) {
    case PairScheme::cantor: return cantor_unpair(z);
    case PairScheme::pepis: return pepis_unpair(z);
    case PairScheme::bitmerge: return bitmerge_unpair(z);
  }
  return {};
}

}  // namespace natbdd
