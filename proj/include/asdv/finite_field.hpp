#pragma once

#include <cstdint>
#include <vector>

#include "asdv/errors.hpp"
#include "asdv/numeric.hpp"

namespace asdv {

// F_p or F_{p^2} for a small odd prime p, with p != 3 for counting work.
// Degree-2 elements are written a + b*s in the fixed basis {1, s} with
// s^2 = c, the least positive quadratic non-residue mod p.
class FiniteField {
 public:
  FiniteField(i64 p, int degree);

  i64 p() const { return p_; }
  int degree() const { return degree_; }
  i64 q() const { return degree_ == 1 ? p_ : p_ * p_; }
  i64 nonresidue() const { return nonres_; }

  struct Elem {
    i64 a = 0, b = 0;
    friend bool operator==(const Elem&, const Elem&) = default;
  };

  Elem zero() const { return {}; }
  Elem one() const { return {1, 0}; }
  Elem from_int(i64 v) const {
    i64 a = v % p_;
    if (a < 0) a += p_;
    return {a, 0};
  }
  // Enumeration: index in [0, q); degree-1 field elements come first.
  Elem element(i64 index) const { return {index % p_, index / p_}; }
  bool in_prime_field(const Elem& x) const { return x.b == 0; }

  Elem add(const Elem& x, const Elem& y) const { return {(x.a + y.a) % p_, (x.b + y.b) % p_}; }
  Elem sub(const Elem& x, const Elem& y) const {
    return {(x.a - y.a + p_) % p_, (x.b - y.b + p_) % p_};
  }
  Elem mul(const Elem& x, const Elem& y) const {
    return {(x.a * y.a + nonres_ * (x.b * y.b % p_)) % p_, (x.a * y.b + x.b * y.a) % p_};
  }

  bool is_zero(const Elem& x) const { return x.a == 0 && x.b == 0; }

  // Quadratic character: +1 on nonzero squares, -1 on non-squares, 0 at 0.
  // For degree 2 this is chi_p of the norm a^2 - c b^2.
  int chi(const Elem& x) const {
    if (degree_ == 1) return chi_table_[x.a];
    i64 n = (x.a * x.a - nonres_ * (x.b * x.b % p_)) % p_;
    if (n < 0) n += p_;
    return chi_table_[n];
  }

 private:
  i64 p_;
  int degree_;
  i64 nonres_ = 0;
  std::vector<signed char> chi_table_;
};

}  // namespace asdv
