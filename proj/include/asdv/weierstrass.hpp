#pragma once

#include <string>
#include <vector>

#include "asdv/poly.hpp"

namespace asdv {

// One-parameter Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
// with polynomial coefficients in the base parameter t.
struct WeierstrassFamily {
  std::string family_id;
  QPoly a1, a2, a3, a4, a6;

  // "g1515": a1 = 1 - t^3, a2 = a3 = -t^3 (two width-15 cusps);
  // "g2":    same with t^2 (the index-2 relative).
  static WeierstrassFamily by_id(const std::string& id);
};

QPoly b2_poly(const WeierstrassFamily& f);
QPoly b4_poly(const WeierstrassFamily& f);
QPoly b6_poly(const WeierstrassFamily& f);
QPoly b8_poly(const WeierstrassFamily& f);
QPoly c4_poly(const WeierstrassFamily& f);
QPoly c6_poly(const WeierstrassFamily& f);

// Standard Weierstrass discriminant -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6.
QPoly discriminant_poly(const WeierstrassFamily& f);

// j = c4^3 / discriminant, reduced.
RationalFunction j_invariant(const WeierstrassFamily& f);

struct KodairaPlace {
  std::string place;  // "t=0", "t=inf", or the squarefree factor whose roots it ranges over
  i64 multiplicity;   // local order of vanishing of the discriminant (I_n type)
  i64 count;          // number of geometric places sharing this entry
};

struct KodairaSummary {
  std::vector<KodairaPlace> places;
  i64 total = 0;  // Euler number contribution: sum of multiplicity * count
};

// Multiplicities of the multiplicative fibers; t = infinity is analyzed on
// the chart s = 1/t after the rescaling that makes the model integral at
// s = 0.  Throws IntegrityError on an additive fiber.
KodairaSummary kodaira_multiplicities(const WeierstrassFamily& f);

// Order of the section (x0, y0) in the Mordell-Weil group of the generic
// fiber over Q(t), by exact chord-tangent arithmetic.  Searches orders up to
// `bound`; throws if the point is not on the curve or no order is found.
int torsion_order_check(const WeierstrassFamily& f, long x0 = 0, long y0 = 0, int bound = 12);

// Symbolic checks for the base involution t -> -1/t of the g1515 family:
// the change of variables onto the even model, invariance of the even model
// under (t, X, Y) -> (-1/t, -X, Y/t), and invariance of j.
bool involution_check();

// j(-1/t) == j(t) as rational functions.
bool j_inversion_invariant(const WeierstrassFamily& f);

}  // namespace asdv
