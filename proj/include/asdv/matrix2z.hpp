#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "asdv/errors.hpp"
#include "asdv/numeric.hpp"

namespace asdv {

// Element of SL_2(Z); entries stay tiny for every word used here.
struct Mat2 {
  i64 a = 1, b = 0, c = 0, d = 1;

  i64 det() const { return a * d - b * c; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;

  Mat2 inverse() const {
    if (det() != 1) throw ArgumentError("Mat2: inverse requires det 1");
    return {d, -b, -c, a};
  }

  Mat2 power(int e) const {
    Mat2 base = e < 0 ? inverse() : *this;
    int n = e < 0 ? -e : e;
    Mat2 r;
    for (int k = 0; k < n; ++k) r = r * base;
    return r;
  }

  std::string str() const {
    return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" + std::to_string(c) + "," +
           std::to_string(d) + "]]";
  }
};

inline Mat2 gen_gamma() { return {1, 5, 0, 1}; }
inline Mat2 gen_delta() { return {1, 0, -1, 1}; }
inline Mat2 gen_A() { return {-2, -5, 1, 2}; }

// Congruence membership with the upper-triangular convention: 5 | b.
inline bool in_gamma0_5(const Mat2& m) {
  if (m.det() != 1) throw ArgumentError("in_gamma0_5: det must be 1");
  return m.b % 5 == 0;
}

inline bool in_gamma1_5(const Mat2& m) {
  if (m.det() != 1) throw ArgumentError("in_gamma1_5: det must be 1");
  auto r = [](i64 v) { return ((v % 5) + 5) % 5; };
  return m.b % 5 == 0 && r(m.a) == 1 && r(m.d) == 1;
}

inline bool in_pm_gamma1_5(const Mat2& m) {
  Mat2 neg{-m.a, -m.b, -m.c, -m.d};
  return in_gamma1_5(m) || in_gamma1_5(neg);
}

// Exact product of the word; true iff it is the identity.
inline bool verify_relation(std::span<const std::pair<Mat2, int>> word) {
  Mat2 acc;
  for (const auto& [m, e] : word) acc = acc * m.power(e);
  return acc == Mat2{};
}

// Representatives are pairwise inequivalent and each self-equivalent:
// rep_i rep_j^{-1} lies in the subgroup iff i = j.
template <class SubgroupTest>
bool verify_cosets(const std::vector<Mat2>& reps, SubgroupTest&& in_subgroup) {
  for (size_t i = 0; i < reps.size(); ++i)
    for (size_t j = 0; j < reps.size(); ++j)
      if (in_subgroup(reps[i] * reps[j].inverse()) != (i == j)) return false;
  return true;
}

// Cusp of the extended upper half plane: infinity or a rational u/v.
struct Cusp {
  bool infinite = true;
  i64 u = 1, v = 0;  // reduced, v > 0 for finite cusps

  static Cusp at_infinity() { return {}; }
  static Cusp rational(i64 u, i64 v);
};

// m fixes the cusp and is parabolic (trace +-2, not +-I).
bool stabilizer_check(const Cusp& cusp, const Mat2& m);

// Translation length of the parabolic element at its fixed cusp.
i64 parabolic_width(const Cusp& cusp, const Mat2& m);

}  // namespace asdv
