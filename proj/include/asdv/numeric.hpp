#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace asdv {

using i64 = std::int64_t;
using BigInt = mpz_class;
using BigRational = mpq_class;

// num/den reduced to lowest terms with den >= 1.
inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const BigRational& x) { return x.get_den() == 1; }

inline BigInt pow_bigint(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline BigRational pow_rational(const BigRational& base, unsigned long e) {
  // num/den stay coprime under powers, so no canonicalize needed.
  return BigRational(pow_bigint(base.get_num(), e), pow_bigint(base.get_den(), e));
}

// Exponent of the prime p in the nonzero integer x.
inline i64 factor_multiplicity(const BigInt& x, const BigInt& p) {
  BigInt rest;
  return static_cast<i64>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

inline bool is_probable_prime(const BigInt& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

// Exact n-th root of x >= 0: sets root and returns true iff root^n = x.
inline bool nth_root_exact(const BigInt& x, unsigned long n, BigInt& root) {
  if (sgn(x) < 0) return false;
  return mpz_root(root.get_mpz_t(), x.get_mpz_t(), n) != 0;
}

// True iff den(x) is a power of p (including den = 1).
inline bool denominator_power_of(const BigRational& x, const BigInt& p) {
  BigInt rest;
  BigInt den = x.get_den();
  mpz_remove(rest.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  return rest == 1;
}

inline std::string to_string(const BigRational& x) { return x.get_str(); }

}  // namespace asdv
