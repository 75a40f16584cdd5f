#pragma once

#include <string>
#include <vector>

#include "asdv/gaussian.hpp"
#include "asdv/numeric.hpp"

namespace asdv {

// Value of a discrete valuation: an integer, or +infinity for input zero.
class Valuation {
 public:
  static Valuation infinity() {
    Valuation v;
    v.inf_ = true;
    return v;
  }
  static Valuation of(i64 value) {
    Valuation v;
    v.v_ = value;
    return v;
  }

  bool is_infinity() const { return inf_; }
  i64 value() const;  // throws on infinity

  bool at_least(i64 bound) const { return inf_ || v_ >= bound; }

  friend Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.inf_ || b.inf_) return infinity();
    return of(a.v_ + b.v_);
  }
  friend Valuation min(const Valuation& a, const Valuation& b) {
    if (a.inf_) return b;
    if (b.inf_) return a;
    return of(a.v_ < b.v_ ? a.v_ : b.v_);
  }
  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
  }
  friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }

  std::string str() const { return inf_ ? "inf" : std::to_string(v_); }

 private:
  bool inf_ = false;
  i64 v_ = 0;
};

// Prime of Z[i] above an odd rational prime p != 2.  Normalized so that
// v(generator) = 1 at a split place and v(p) = 1 at an inert place; with
// this normalization the congruence thresholds read the same at every
// place above p.
struct PlaceAboveP {
  i64 p = 0;
  bool split = false;
  i64 gen_re = 0, gen_im = 0;  // split: re > |im| > 0; inert: (p, 0)

  std::string label() const;
};

// Exponent of the prime p in the rational x; +infinity for x = 0.
Valuation ord_p(const BigRational& x, i64 p);

// The places of Z[i] above the odd prime p: two conjugate split places when
// p = 1 mod 4 (positive-imaginary generator first), one inert place when
// p = 3 mod 4.  p = 2 is ramified and unsupported.
std::vector<PlaceAboveP> places_above(i64 p);

// Valuation of z at the given place, computed by clearing denominators and
// repeated exact division by the generator in Z[i].
Valuation gaussian_valuation(const GaussianRational& z, const PlaceAboveP& place);

}  // namespace asdv
