#pragma once

#include <ostream>
#include <string>
#include <utility>

#include "asdv/errors.hpp"
#include "asdv/numeric.hpp"

namespace asdv {

// Element of Q(i) with exact rational real and imaginary parts.
struct GaussianRational {
  BigRational re, im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(BigRational r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long r) : re(r), im(0) {}                    // NOLINT(google-explicit-constructor)
  GaussianRational(BigRational r, BigRational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long r, long i) : re(r), im(i) {}

  static GaussianRational unit_i() { return {BigRational(0), BigRational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  GaussianRational conj() const { return {re, -im}; }
  BigRational norm() const { return re * re + im * im; }

  GaussianRational operator-() const { return {-re, -im}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    BigRational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    BigRational n = o.norm();
    if (sgn(n) == 0) throw ArgumentError("GaussianRational: division by zero");
    BigRational r = (re * o.re + im * o.im) / n;
    im = (im * o.re - re * o.im) / n;
    re = std::move(r);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline GaussianRational inverse(const GaussianRational& z) {
  return GaussianRational(1) / z;
}

// Exact display form, e.g. "0", "-16/3*i", "1+2*i", "5/2-i".
inline std::string to_string(const GaussianRational& z) {
  if (z.is_zero()) return "0";
  std::string s;
  if (sgn(z.re) != 0) s = z.re.get_str();
  if (sgn(z.im) != 0) {
    BigRational a = abs(z.im);
    std::string part = (a == 1) ? "i" : a.get_str() + "*i";
    if (s.empty())
      s = (sgn(z.im) < 0 ? "-" : "") + part;
    else
      s += (sgn(z.im) < 0 ? "-" : "+") + part;
  }
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  return os << to_string(z);
}

}  // namespace asdv
