#pragma once

#include <string>
#include <utility>
#include <vector>

#include "asdv/errors.hpp"
#include "asdv/numeric.hpp"

namespace asdv {

// Dense univariate polynomial over a commutative coefficient ring K.
// K must be default-constructible to its zero and equality-comparable.
// Division-flavored operations additionally require K to be a field.
template <class K>
class DensePoly {
 public:
  DensePoly() = default;
  DensePoly(long v) : DensePoly(constant(K(v))) {}  // NOLINT(google-explicit-constructor)

  static DensePoly zero() { return {}; }

  static DensePoly constant(K c) {
    DensePoly p;
    if (!(c == K{})) p.c_.push_back(std::move(c));
    return p;
  }

  static DensePoly monomial(K c, int deg) {
    DensePoly p;
    if (!(c == K{})) {
      p.c_.resize(deg + 1);
      p.c_[deg] = std::move(c);
    }
    return p;
  }

  static DensePoly from_coeffs(std::vector<K> coeffs) {
    DensePoly p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  const K& coeff(int i) const {
    static const K kZero{};
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
  }
  const K& leading() const {
    if (c_.empty()) throw ArgumentError("DensePoly: leading coefficient of zero");
    return c_.back();
  }
  const std::vector<K>& coeffs() const { return c_; }

  K evaluate(const K& x) const {
    K acc{};
    for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
    return acc;
  }

  DensePoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<K> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * K(static_cast<long>(i));
    return from_coeffs(std::move(d));
  }

  DensePoly& operator+=(const DensePoly& o) { return *this = *this + o; }
  DensePoly& operator-=(const DensePoly& o) { return *this = *this - o; }
  DensePoly& operator*=(const DensePoly& o) { return *this = *this * o; }

  DensePoly operator-() const {
    DensePoly r = *this;
    for (auto& x : r.c_) x = K{} - x;
    return r;
  }

  friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
    std::vector<K> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
      if (i < a.c_.size()) c[i] += a.c_[i];
      if (i < b.c_.size()) c[i] += b.c_[i];
    }
    return from_coeffs(std::move(c));
  }
  friend DensePoly operator-(const DensePoly& a, const DensePoly& b) { return a + (-b); }

  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<K> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == K{}) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return from_coeffs(std::move(c));
  }

  DensePoly scaled(const K& s) const {
    DensePoly r;
    r.c_.reserve(c_.size());
    for (const auto& x : c_) r.c_.push_back(x * s);
    r.trim();
    return r;
  }

  DensePoly pow(unsigned e) const {
    DensePoly r = constant(K(1));
    for (unsigned k = 0; k < e; ++k) r = r * *this;
    return r;
  }

  // Quotient and remainder; requires field K and b != 0.
  friend std::pair<DensePoly, DensePoly> divmod(const DensePoly& a, const DensePoly& b) {
    if (b.is_zero()) throw ArgumentError("DensePoly: division by zero polynomial");
    DensePoly r = a;
    std::vector<K> q;
    if (a.degree() >= b.degree()) q.resize(a.degree() - b.degree() + 1);
    K inv_lead = K(1) / b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
      int shift = r.degree() - b.degree();
      K factor = r.leading() * inv_lead;
      q[shift] = factor;
      for (int i = 0; i <= b.degree(); ++i) r.c_[shift + i] -= factor * b.c_[i];
      r.trim();
    }
    return {from_coeffs(std::move(q)), std::move(r)};
  }

  // Monic gcd; requires field K.
  friend DensePoly gcd(DensePoly a, DensePoly b) {
    while (!b.is_zero()) {
      auto [q, r] = divmod(a, b);
      (void)q;
      a = std::move(b);
      b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(K(1) / a.leading());
  }

  friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const DensePoly& a, const DensePoly& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == K{}) c_.pop_back();
  }

  std::vector<K> c_;  // c_[i] x^i, trimmed
};

using QPoly = DensePoly<BigRational>;

// Order of vanishing at x = 0 (number of trailing zero coefficients).
inline int vanishing_order_at_zero(const QPoly& p) {
  if (p.is_zero()) throw ArgumentError("vanishing_order_at_zero: zero polynomial");
  int k = 0;
  while (sgn(p.coeff(k)) == 0) ++k;
  return k;
}

// p(t) / t^k, exact.
QPoly shift_down(const QPoly& p, int k);

// True iff every coefficient is a rational integer.
bool has_integer_coeffs(const QPoly& p);

std::string poly_str(const QPoly& p, const std::string& var);

// Reduced fraction of rational polynomials: denominator monic, gcd 1.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(QPoly::constant(BigRational(1))) {}
  RationalFunction(long v)  // NOLINT(google-explicit-constructor)
      : num_(QPoly::constant(BigRational(v))), den_(QPoly::constant(BigRational(1))) {}
  RationalFunction(QPoly num, QPoly den);

  static RationalFunction poly(QPoly p) { return RationalFunction(std::move(p), QPoly::constant(BigRational(1))); }
  static RationalFunction constant(BigRational c) { return poly(QPoly::constant(std::move(c))); }
  static RationalFunction variable() { return poly(QPoly::monomial(BigRational(1), 1)); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  std::string str(const std::string& var) const;

 private:
  QPoly num_, den_;
};

// f evaluated at a rational-function argument (Horner).
RationalFunction compose(const QPoly& f, const RationalFunction& x);
RationalFunction compose(const RationalFunction& f, const RationalFunction& x);

}  // namespace asdv
