#include "asdv/characters.hpp"

#include <algorithm>

#include "asdv/numeric.hpp"

namespace asdv {

namespace {

i64 mod_pow(i64 base, i64 exp, i64 mod) {
  i64 r = 1 % mod;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

constexpr std::array<i64, 8> kSupportedD{-3, -4, 2, 3, 6, -1, -2, -6};

}  // namespace

int legendre_symbol(i64 a, i64 p) {
  if (p < 3 || p % 2 == 0 || !is_probable_prime(BigInt(p)))
    throw ArgumentError("legendre_symbol: p must be an odd prime");
  i64 r = a % p;
  if (r < 0) r += p;
  if (r == 0) return 0;
  i64 e = mod_pow(r, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

QuadraticCharacter::QuadraticCharacter(i64 d) : d_(d) {
  if (std::find(kSupportedD.begin(), kSupportedD.end(), d) == kSupportedD.end())
    throw ArgumentError("QuadraticCharacter: unsupported discriminant label " + std::to_string(d));
}

int QuadraticCharacter::at_prime(i64 p) const {
  if (p == 2) {
    if (d_ % 2 == 0) return 0;
    i64 r = d_ % 8;
    if (r < 0) r += 8;
    return (r == 1 || r == 7) ? 1 : -1;
  }
  if (d_ % p == 0) return 0;
  return legendre_symbol(d_, p);
}

bool is_inert_quadratic(i64 d, i64 p) {
  QuadraticCharacter chi(d);
  if (p == 2 || (2 * d) % p == 0)
    throw ArgumentError("is_inert_quadratic: p = " + std::to_string(p) +
                        " is ramified in Q(sqrt(" + std::to_string(d) + "))");
  return chi.at_prime(p) == -1;
}

}  // namespace asdv
