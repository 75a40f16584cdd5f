#include "asdv/weierstrass.hpp"

#include <algorithm>

#include "asdv/errors.hpp"

namespace asdv {

WeierstrassFamily WeierstrassFamily::by_id(const std::string& id) {
  int d = 0;
  if (id == "g1515")
    d = 3;
  else if (id == "g2")
    d = 2;
  else
    throw ArgumentError("WeierstrassFamily: unknown family id '" + id + "'");
  QPoly td = QPoly::monomial(BigRational(1), d);
  WeierstrassFamily f;
  f.family_id = id;
  f.a1 = QPoly::constant(BigRational(1)) - td;
  f.a2 = -td;
  f.a3 = -td;
  f.a4 = QPoly::zero();
  f.a6 = QPoly::zero();
  return f;
}

QPoly b2_poly(const WeierstrassFamily& f) { return f.a1 * f.a1 + f.a2.scaled(BigRational(4)); }
QPoly b4_poly(const WeierstrassFamily& f) { return f.a4.scaled(BigRational(2)) + f.a1 * f.a3; }
QPoly b6_poly(const WeierstrassFamily& f) { return f.a3 * f.a3 + f.a6.scaled(BigRational(4)); }

QPoly b8_poly(const WeierstrassFamily& f) {
  return f.a1 * f.a1 * f.a6 + (f.a2 * f.a6).scaled(BigRational(4)) - f.a1 * f.a3 * f.a4 +
         f.a2 * f.a3 * f.a3 - f.a4 * f.a4;
}

QPoly c4_poly(const WeierstrassFamily& f) {
  QPoly b2 = b2_poly(f);
  return b2 * b2 - b4_poly(f).scaled(BigRational(24));
}

QPoly c6_poly(const WeierstrassFamily& f) {
  QPoly b2 = b2_poly(f);
  return -(b2 * b2 * b2) + (b2 * b4_poly(f)).scaled(BigRational(36)) -
         b6_poly(f).scaled(BigRational(216));
}

QPoly discriminant_poly(const WeierstrassFamily& f) {
  QPoly b2 = b2_poly(f), b4 = b4_poly(f), b6 = b6_poly(f), b8 = b8_poly(f);
  return -(b2 * b2 * b8) - (b4 * b4 * b4).scaled(BigRational(8)) -
         (b6 * b6).scaled(BigRational(27)) + (b2 * b4 * b6).scaled(BigRational(9));
}

RationalFunction j_invariant(const WeierstrassFamily& f) {
  QPoly c4 = c4_poly(f);
  return RationalFunction(c4 * c4 * c4, discriminant_poly(f));
}

namespace {

// Squarefree decomposition over Q (Yun): p = prod part[i]^(i+1).
std::vector<QPoly> squarefree_decomposition(QPoly p) {
  std::vector<QPoly> parts;
  QPoly g = gcd(p, p.derivative());
  QPoly w = divmod(p, g).first;
  while (w.degree() > 0) {
    QPoly y = gcd(w, g);
    parts.push_back(divmod(w, y).first);
    w = y;
    g = divmod(g, y).first;
  }
  return parts;
}

}  // namespace

KodairaSummary kodaira_multiplicities(const WeierstrassFamily& f) {
  QPoly disc = discriminant_poly(f);
  QPoly c4 = c4_poly(f);
  if (disc.is_zero()) throw ArgumentError("kodaira_multiplicities: discriminant vanishes identically");
  KodairaSummary out;

  int m0 = vanishing_order_at_zero(disc);
  if (m0 > 0) {
    if (vanishing_order_at_zero(c4) > 0)
      throw IntegrityError("kodaira_multiplicities: additive fiber at t = 0 is unsupported");
    out.places.push_back({"t=0", m0, 1});
    out.total += m0;
  }

  QPoly reduced = shift_down(disc, m0);
  auto parts = squarefree_decomposition(reduced);
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree() <= 0) continue;
    if (gcd(parts[i], c4).degree() > 0)
      throw IntegrityError("kodaira_multiplicities: additive fiber along " +
                           poly_str(parts[i], "t"));
    i64 mult = static_cast<i64>(i) + 1;
    out.places.push_back({poly_str(parts[i], "t"), mult, parts[i].degree()});
    out.total += mult * parts[i].degree();
  }

  // Chart s = 1/t: (x, y) -> (x/s^{2k}, y/s^{3k}) with the least k giving an
  // integral model at s = 0; the discriminant picks up s^{12k}.
  int k = 0;
  const std::pair<const QPoly*, int> weighted[] = {
      {&f.a1, 1}, {&f.a2, 2}, {&f.a3, 3}, {&f.a4, 4}, {&f.a6, 6}};
  for (auto [a, w] : weighted) {
    if (!a->is_zero()) k = std::max(k, (a->degree() + w - 1) / w);
  }
  i64 m_inf = 12 * static_cast<i64>(k) - disc.degree();
  if (m_inf < 0) throw IntegrityError("kodaira_multiplicities: non-integral chart at infinity");
  if (m_inf > 0) {
    if (4 * k - c4.degree() > 0)
      throw IntegrityError("kodaira_multiplicities: additive fiber at t = inf is unsupported");
    out.places.push_back({"t=inf", m_inf, 1});
    out.total += m_inf;
  }
  return out;
}

namespace {

struct FieldPoint {
  bool at_infinity = true;
  RationalFunction x, y;
};

struct GenericFiber {
  RationalFunction a1, a2, a3, a4, a6;

  bool on_curve(const FieldPoint& p) const {
    if (p.at_infinity) return true;
    RationalFunction lhs = p.y * p.y + a1 * p.x * p.y + a3 * p.y;
    RationalFunction rhs = p.x * p.x * p.x + a2 * p.x * p.x + a4 * p.x + a6;
    return lhs == rhs;
  }

  FieldPoint negate(const FieldPoint& p) const {
    if (p.at_infinity) return p;
    return {false, p.x, -p.y - a1 * p.x - a3};
  }

  FieldPoint add(const FieldPoint& p, const FieldPoint& q) const {
    if (p.at_infinity) return q;
    if (q.at_infinity) return p;
    RationalFunction lambda;
    if (p.x == q.x) {
      // Either inverse points or a tangent line.
      RationalFunction denom = p.y + q.y + a1 * p.x + a3;
      if (denom.is_zero()) return {};
      lambda = (p.x * p.x * RationalFunction(3) + a2 * p.x * RationalFunction(2) + a4 - a1 * p.y) / denom;
    } else {
      lambda = (q.y - p.y) / (q.x - p.x);
    }
    RationalFunction nu = p.y - lambda * p.x;
    RationalFunction x3 = lambda * lambda + a1 * lambda - a2 - p.x - q.x;
    RationalFunction y3 = -(lambda + a1) * x3 - nu - a3;
    return {false, x3, y3};
  }
};

}  // namespace

int torsion_order_check(const WeierstrassFamily& f, long x0, long y0, int bound) {
  GenericFiber curve{RationalFunction::poly(f.a1), RationalFunction::poly(f.a2),
                     RationalFunction::poly(f.a3), RationalFunction::poly(f.a4),
                     RationalFunction::poly(f.a6)};
  FieldPoint p{false, RationalFunction(x0), RationalFunction(y0)};
  if (!curve.on_curve(p)) throw ArgumentError("torsion_order_check: point not on the curve");
  FieldPoint acc = p;
  for (int k = 1; k <= bound; ++k) {
    if (acc.at_infinity) return k;
    acc = curve.add(acc, p);
  }
  // "acc" after the loop holds (bound+1) P; order > bound.
  throw IntegrityError("torsion_order_check: no order found up to bound");
}

namespace {

using XPoly = DensePoly<RationalFunction>;   // polynomials in X over Q(t)
using XYPoly = DensePoly<XPoly>;             // polynomials in Y with XPoly coefficients

RationalFunction rf_monomial(long num, int deg, long den_num = 1) {
  return RationalFunction(QPoly::monomial(BigRational(num, den_num), deg),
                          QPoly::constant(BigRational(1)));
}

// Even model of the g1515 family: Y^2 = t (X^3 - P(t) X + Q(t)).
struct EvenModel {
  RationalFunction p, q;
  XYPoly equation() const {  // Y^2 - t X^3 + t P X - t Q
    RationalFunction t = RationalFunction::variable();
    XPoly y0 = XPoly::from_coeffs({-t * q, t * p, RationalFunction(), -t});
    XPoly y2 = XPoly::from_coeffs({RationalFunction(1)});
    return XYPoly::from_coeffs({y0, XPoly(), y2});
  }
};

EvenModel even_model() {
  QPoly pn = QPoly::from_coeffs({BigRational(1), BigRational(0), BigRational(0), BigRational(12),
                                 BigRational(0), BigRational(0), BigRational(14), BigRational(0),
                                 BigRational(0), BigRational(-12), BigRational(0), BigRational(0),
                                 BigRational(1)});
  QPoly qn = QPoly::from_coeffs({BigRational(1), BigRational(0), BigRational(0), BigRational(18),
                                 BigRational(0), BigRational(0), BigRational(75), BigRational(0),
                                 BigRational(0), BigRational(0), BigRational(0), BigRational(0),
                                 BigRational(75), BigRational(0), BigRational(0), BigRational(-18),
                                 BigRational(0), BigRational(0), BigRational(1)});
  EvenModel m;
  m.p = RationalFunction(pn, QPoly::monomial(BigRational(48), 6));
  m.q = RationalFunction(qn, QPoly::monomial(BigRational(864), 9));
  return m;
}

// Substitute t -> -1/t in every coefficient, X -> -X, Y -> Y/t.
XYPoly apply_base_involution(const XYPoly& e) {
  RationalFunction neg_inv_t =
      RationalFunction(QPoly::constant(BigRational(-1)), QPoly::monomial(BigRational(1), 1));
  RationalFunction inv_t =
      RationalFunction(QPoly::constant(BigRational(1)), QPoly::monomial(BigRational(1), 1));
  std::vector<XPoly> ycoeffs;
  RationalFunction ypow(1);
  for (int j = 0; j <= e.degree(); ++j) {
    std::vector<RationalFunction> xcoeffs;
    const XPoly& row = e.coeff(j);
    for (int i = 0; i <= row.degree(); ++i) {
      RationalFunction c = compose(row.coeff(i), neg_inv_t);
      if (i % 2 == 1) c = -c;  // X -> -X
      xcoeffs.push_back(c * ypow);
    }
    ycoeffs.push_back(XPoly::from_coeffs(std::move(xcoeffs)));
    ypow = ypow * inv_t;  // Y -> Y/t
  }
  return XYPoly::from_coeffs(std::move(ycoeffs));
}

}  // namespace

bool involution_check() {
  WeierstrassFamily fam = WeierstrassFamily::by_id("g1515");
  RationalFunction t = RationalFunction::variable();
  RationalFunction t3 = rf_monomial(1, 3), t4 = rf_monomial(1, 4), t6 = rf_monomial(1, 6),
                   t9 = rf_monomial(1, 9);

  // x = t^3 X - t^6/12 + t^3/2 - 1/12
  XPoly x_expr = XPoly::from_coeffs(
      {rf_monomial(-1, 6, 12) + rf_monomial(1, 3, 2) + RationalFunction::constant(BigRational(-1, 12)),
       t3});
  // y = t^4 Y + (t^6/2 - t^3/2) X - t^9/24 + 7 t^6/24 + 5 t^3/24 + 1/24
  XPoly y_x_part = XPoly::from_coeffs(
      {rf_monomial(-1, 9, 24) + rf_monomial(7, 6, 24) + rf_monomial(5, 3, 24) +
           RationalFunction::constant(BigRational(1, 24)),
       rf_monomial(1, 6, 2) + rf_monomial(-1, 3, 2)});
  XYPoly y_expr = XYPoly::from_coeffs({y_x_part, XPoly::from_coeffs({t4})});
  XYPoly x_lift = XYPoly::from_coeffs({x_expr});

  // y^2 + a1 xy + a3 y - x^3 - a2 x^2 (a4 = a6 = 0)
  auto lift = [](const QPoly& p) {
    return XYPoly::from_coeffs({XPoly::from_coeffs({RationalFunction::poly(p)})});
  };
  XYPoly substituted = y_expr * y_expr + lift(fam.a1) * x_lift * y_expr + lift(fam.a3) * y_expr -
                       x_lift * x_lift * x_lift - lift(fam.a2) * x_lift * x_lift;

  EvenModel even = even_model();
  XYPoly target = even.equation();

  // The substitution must land on a Q(t)-multiple of the even model.
  const XPoly& y2_row = substituted.coeff(2);
  if (y2_row.degree() != 0) return false;
  RationalFunction scale = y2_row.coeff(0);
  if (scale.is_zero()) return false;
  XYPoly scaled_target = target * XYPoly::from_coeffs({XPoly::from_coeffs({scale})});
  bool change_of_variables_ok = (substituted == scaled_target);

  // A^2 = identity on the base.
  RationalFunction neg_inv_t =
      RationalFunction(QPoly::constant(BigRational(-1)), QPoly::monomial(BigRational(1), 1));
  bool involution_on_base = (compose(neg_inv_t, neg_inv_t) == t);

  // (t, X, Y) -> (-1/t, -X, Y/t) preserves the even model up to the unit 1/t^2.
  XYPoly transformed = apply_base_involution(target);
  RationalFunction t2 = rf_monomial(1, 2);
  XYPoly rescaled = transformed * XYPoly::from_coeffs({XPoly::from_coeffs({t2})});
  bool model_invariant = (rescaled == target);

  return change_of_variables_ok && involution_on_base && model_invariant &&
         j_inversion_invariant(fam);
}

bool j_inversion_invariant(const WeierstrassFamily& f) {
  RationalFunction j = j_invariant(f);
  RationalFunction neg_inv_t =
      RationalFunction(QPoly::constant(BigRational(-1)), QPoly::monomial(BigRational(1), 1));
  return compose(j, neg_inv_t) == j;
}

}  // namespace asdv
