#include "asdv/newform.hpp"

#include "asdv/errors.hpp"

namespace asdv {

NewformCoefficients NewformCoefficients::from_table(const std::string& label) {
  if (label == "g+" || label == "g-") {
    NewformCoefficients g(label, 27, QuadraticCharacter(-3));
    // q-expansion of g+ at primes: q - 3i q^2 + 3i q^5 + 5 q^7 + 15i q^11
    // - 10 q^13 - 18i q^17 - 16 q^19 + 12i q^23 - 30i q^29 - q^31; a_3 = 0
    // at the bad prime.  g- is the coefficientwise conjugate.
    const i64 sign = (label == "g+") ? 1 : -1;
    g.prime_values_[2] = GaussianRational(0, -3 * sign);
    g.prime_values_[3] = GaussianRational(0);
    g.prime_values_[5] = GaussianRational(0, 3 * sign);
    g.prime_values_[7] = GaussianRational(5);
    g.prime_values_[11] = GaussianRational(0, 15 * sign);
    g.prime_values_[13] = GaussianRational(-10);
    g.prime_values_[17] = GaussianRational(0, -18 * sign);
    g.prime_values_[19] = GaussianRational(-16);
    g.prime_values_[23] = GaussianRational(0, 12 * sign);
    g.prime_values_[29] = GaussianRational(0, -30 * sign);
    g.prime_values_[31] = GaussianRational(-1);
    return g;
  }
  if (label == "g2") {
    NewformCoefficients g(label, 16, QuadraticCharacter(-4));
    // q - 6 q^5 + 10 q^13 - 30 q^17 + 42 q^29; zero at 2 (bad prime) and at
    // the inert primes of Q(i) below 31.
    g.prime_values_[2] = GaussianRational(0);
    g.prime_values_[3] = GaussianRational(0);
    g.prime_values_[5] = GaussianRational(-6);
    g.prime_values_[7] = GaussianRational(0);
    g.prime_values_[11] = GaussianRational(0);
    g.prime_values_[13] = GaussianRational(10);
    g.prime_values_[17] = GaussianRational(-30);
    g.prime_values_[19] = GaussianRational(0);
    g.prime_values_[23] = GaussianRational(0);
    g.prime_values_[29] = GaussianRational(42);
    g.prime_values_[31] = GaussianRational(0);
    return g;
  }
  throw ArgumentError("NewformCoefficients: unknown label '" + label + "'");
}

GaussianRational NewformCoefficients::prime_value(i64 p) const {
  auto it = prime_values_.find(p);
  if (it == prime_values_.end())
    throw ArgumentError("NewformCoefficients: no seeded value at p = " + std::to_string(p) +
                        " for " + label_);
  return it->second;
}

GaussianRational NewformCoefficients::coeff(i64 n) const {
  if (n < 1) throw ArgumentError("NewformCoefficients: index must be >= 1");
  GaussianRational result(1);
  i64 rest = n;
  for (i64 p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    int r = 0;
    while (rest % p == 0) {
      rest /= p;
      ++r;
    }
    result *= prime_power_value(p, r);
  }
  if (rest > 1) result *= prime_power_value(rest, 1);
  return result;
}

GaussianRational NewformCoefficients::prime_power_value(i64 p, int r) const {
  GaussianRational ap = prime_value(p);
  if (level_ % p == 0) {
    GaussianRational v(1);
    for (int k = 0; k < r; ++k) v *= ap;
    return v;
  }
  GaussianRational chi_p2(BigRational(chi_.at_prime(p)) * p * p);
  GaussianRational prev(1), cur = ap;
  for (int k = 1; k < r; ++k) {
    GaussianRational next = ap * cur - chi_p2 * prev;
    prev = cur;
    cur = next;
  }
  return r == 0 ? GaussianRational(1) : cur;
}

}  // namespace asdv
