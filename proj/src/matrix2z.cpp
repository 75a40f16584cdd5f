#include "asdv/matrix2z.hpp"

#include <numeric>

namespace asdv {

Cusp Cusp::rational(i64 u, i64 v) {
  if (v == 0) return at_infinity();
  i64 g = std::gcd(u < 0 ? -u : u, v < 0 ? -v : v);
  u /= g;
  v /= g;
  if (v < 0) {
    u = -u;
    v = -v;
  }
  Cusp c;
  c.infinite = false;
  c.u = u;
  c.v = v;
  return c;
}

namespace {

// m (or -m) as I + h N with N the nilpotent attached to the cusp; 0 if m is
// not parabolic or does not fix the cusp.
i64 parabolic_translation(const Cusp& cusp, const Mat2& m) {
  Mat2 s = m;
  i64 tr = m.a + m.d;
  if (tr == -2) s = Mat2{-m.a, -m.b, -m.c, -m.d};
  else if (tr != 2) return 0;
  if (s == Mat2{}) return 0;
  // s = I + h [[-uv, u^2], [-v^2, uv]]
  i64 u = cusp.infinite ? 1 : cusp.u;
  i64 v = cusp.infinite ? 0 : cusp.v;
  i64 h;
  if (v != 0) {
    if (s.c % (v * v) != 0) return 0;
    h = -s.c / (v * v);
  } else {
    h = s.b;
  }
  Mat2 expected{1 - h * u * v, h * u * u, -h * v * v, 1 + h * u * v};
  return s == expected ? h : 0;
}

}  // namespace

bool stabilizer_check(const Cusp& cusp, const Mat2& m) {
  if (m.det() != 1) throw ArgumentError("stabilizer_check: det must be 1");
  return parabolic_translation(cusp, m) != 0;
}

i64 parabolic_width(const Cusp& cusp, const Mat2& m) {
  i64 h = parabolic_translation(cusp, m);
  if (h == 0) throw ArgumentError("parabolic_width: element does not stabilize the cusp");
  return h < 0 ? -h : h;
}

}  // namespace asdv
