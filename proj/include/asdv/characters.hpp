#pragma once

#include <array>

#include "asdv/errors.hpp"
#include "asdv/gaussian.hpp"

namespace asdv {

// Dirichlet character mod 5 with values in Q(i).  The group (Z/5)* is cyclic
// generated by 2; chi3 is fixed by chi3(2) = i, chi1 is trivial, chi2 = chi3^2
// and chi4 = chi3^3.
class CharacterMod5 {
 public:
  static CharacterMod5 chi1() { return CharacterMod5(0); }
  static CharacterMod5 chi2() { return CharacterMod5(2); }
  static CharacterMod5 chi3() { return CharacterMod5(1); }
  static CharacterMod5 chi4() { return CharacterMod5(3); }

  GaussianRational operator()(i64 n) const {
    i64 r = n % 5;
    if (r < 0) r += 5;
    if (r == 0) return GaussianRational(0);
    // discrete log of r base 2: 1,2,4,3 -> 0,1,2,3
    static constexpr std::array<int, 5> kLog{0, 0, 1, 3, 2};
    int e = (kLog[r] * power_) % 4;
    switch (e) {
      case 0: return GaussianRational(1);
      case 1: return GaussianRational(0, 1);
      case 2: return GaussianRational(-1);
      default: return GaussianRational(0, -1);
    }
  }

 private:
  explicit CharacterMod5(int power) : power_(power) {}
  int power_;  // this character = chi3^power_
};

// Legendre symbol (a/p) for an odd prime p, by Euler's criterion.
int legendre_symbol(i64 a, i64 p);

// Quadratic character attached to Q(sqrt(d)) for the discriminant labels
// d in {-3, -4, 2, 3, 6, -1, -2, -6}, evaluated at primes via the
// Legendre/Kronecker rule.
class QuadraticCharacter {
 public:
  explicit QuadraticCharacter(i64 d);
  i64 d() const { return d_; }
  // Kronecker symbol (d/p) at a prime p; 0 at ramified primes.
  int at_prime(i64 p) const;

 private:
  i64 d_;
};

// True iff the odd prime p is inert in Q(sqrt(d)); p | 2d is a ramified error.
bool is_inert_quadratic(i64 d, i64 p);

}  // namespace asdv
