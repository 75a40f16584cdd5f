#include "asdv/poly.hpp"

#include <sstream>

namespace asdv {

QPoly shift_down(const QPoly& p, int k) {
  if (k == 0) return p;
  if (vanishing_order_at_zero(p) < k)
    throw ArgumentError("shift_down: polynomial not divisible by t^" + std::to_string(k));
  std::vector<BigRational> c(p.degree() - k + 1);
  for (int i = k; i <= p.degree(); ++i) c[i - k] = p.coeff(i);
  return QPoly::from_coeffs(std::move(c));
}

bool has_integer_coeffs(const QPoly& p) {
  for (int i = 0; i <= p.degree(); ++i)
    if (!is_integer(p.coeff(i))) return false;
  return true;
}

std::string poly_str(const QPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const BigRational& c = p.coeff(i);
    if (sgn(c) == 0) continue;
    BigRational a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    bool unit = (a == 1);
    if (i == 0 || !unit) os << a.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

RationalFunction::RationalFunction(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ArgumentError("RationalFunction: zero denominator");
  if (num_.is_zero()) {
    den_ = QPoly::constant(BigRational(1));
    return;
  }
  QPoly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  BigRational lead = den_.leading();
  if (lead != 1) {
    BigRational inv = BigRational(1) / lead;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw ArgumentError("RationalFunction: division by zero");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFunction::str(const std::string& var) const {
  if (den_ == QPoly::constant(BigRational(1))) return poly_str(num_, var);
  return "(" + poly_str(num_, var) + ") / (" + poly_str(den_, var) + ")";
}

RationalFunction compose(const QPoly& f, const RationalFunction& x) {
  RationalFunction acc;
  for (int i = f.degree(); i >= 0; --i)
    acc = acc * x + RationalFunction::constant(f.coeff(i));
  return acc;
}

RationalFunction compose(const RationalFunction& f, const RationalFunction& x) {
  return compose(f.num(), x) / compose(f.den(), x);
}

}  // namespace asdv
