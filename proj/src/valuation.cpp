#include "asdv/valuation.hpp"

#include <cmath>

#include "asdv/errors.hpp"

namespace asdv {

i64 Valuation::value() const {
  if (inf_) throw IntegrityError("Valuation: value() on +infinity");
  return v_;
}

std::string PlaceAboveP::label() const {
  if (!split) return std::to_string(p);
  std::string s = std::to_string(gen_re);
  s += gen_im < 0 ? "-" : "+";
  i64 a = gen_im < 0 ? -gen_im : gen_im;
  if (a != 1) s += std::to_string(a) + "*";
  s += "i";
  return s;
}

Valuation ord_p(const BigRational& x, i64 p) {
  if (p < 2 || !is_probable_prime(BigInt(p))) {
    throw ArgumentError("ord_p: p = " + std::to_string(p) + " is not prime");
  }
  if (sgn(x) == 0) return Valuation::infinity();
  BigInt bp(p);
  return Valuation::of(factor_multiplicity(x.get_num(), bp) -
                       factor_multiplicity(x.get_den(), bp));
}

std::vector<PlaceAboveP> places_above(i64 p) {
  if (p == 2) throw ArgumentError("places_above: p = 2 is ramified in Z[i] and unsupported");
  if (p < 3 || !is_probable_prime(BigInt(p))) {
    throw ArgumentError("places_above: p = " + std::to_string(p) + " is not an odd prime");
  }
  if (p % 4 == 3) {
    PlaceAboveP place;
    place.p = p;
    place.split = false;
    place.gen_re = p;
    return {place};
  }
  // p = 1 mod 4: search a^2 + b^2 = p and fix the representative a > b > 0.
  for (i64 b = 1; b * b * 2 < p; ++b) {
    i64 a2 = p - b * b;
    i64 a = static_cast<i64>(std::sqrt(static_cast<double>(a2)));
    while (a * a < a2) ++a;
    while (a * a > a2) --a;
    if (a * a == a2) {
      PlaceAboveP plus;
      plus.p = p;
      plus.split = true;
      plus.gen_re = a;
      plus.gen_im = b;
      PlaceAboveP minus = plus;
      minus.gen_im = -b;
      return {plus, minus};
    }
  }
  throw IntegrityError("places_above: no two-square decomposition found for p = " +
                       std::to_string(p));
}

namespace {

// Multiplicity of the split generator (a+bi) in the nonzero Gaussian integer
// u+vi, by repeated exact division.
i64 split_multiplicity(BigInt u, BigInt v, i64 a, i64 b, i64 p) {
  i64 count = 0;
  BigInt bp(p);
  for (;;) {
    // (u+vi)(a-bi) = (ua+vb) + (va-ub)i must be divisible by p = (a+bi)(a-bi).
    BigInt x = u * a + v * b;
    BigInt y = v * a - u * b;
    if (!mpz_divisible_p(x.get_mpz_t(), bp.get_mpz_t()) ||
        !mpz_divisible_p(y.get_mpz_t(), bp.get_mpz_t()))
      return count;
    u = x / bp;
    v = y / bp;
    ++count;
  }
}

}  // namespace

Valuation gaussian_valuation(const GaussianRational& z, const PlaceAboveP& place) {
  if (z.is_zero()) return Valuation::infinity();
  // Clear denominators: z = (u + vi)/d with u, v, d integers.
  BigInt dre = z.re.get_den();
  BigInt dim = z.im.get_den();
  BigInt d = dre * dim / gcd(dre, dim);
  BigInt u = z.re.get_num() * (d / dre);
  BigInt v = z.im.get_num() * (d / dim);
  BigInt bp(place.p);
  i64 denom_mult = factor_multiplicity(d, bp);
  if (!place.split) {
    // Inert place: division by p is exact iff p divides both parts.
    i64 m = 0;
    if (sgn(u) != 0 && sgn(v) != 0) {
      m = std::min(factor_multiplicity(u, bp), factor_multiplicity(v, bp));
    } else if (sgn(u) != 0) {
      m = factor_multiplicity(u, bp);
    } else {
      m = factor_multiplicity(v, bp);
    }
    return Valuation::of(m - denom_mult);
  }
  i64 m = split_multiplicity(std::move(u), std::move(v), place.gen_re, place.gen_im, place.p);
  return Valuation::of(m - denom_mult);
}

}  // namespace asdv
