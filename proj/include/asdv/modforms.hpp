#pragma once

#include "asdv/puiseux.hpp"

namespace asdv {

// Weight 3 Eisenstein series on the grid q^{1/5}, normalized to value 1 at
// the infinite cusp.  Coefficients are rational integers; retained through
// index `trunc`.
PuiseuxSeries eisenstein_e1(i64 trunc);

// Companion Eisenstein series supported away from the infinite cusp:
// constant term 0, leading term q^{1/5}.
PuiseuxSeries eisenstein_e2(i64 trunc);

struct CuspFormBasis {
  PuiseuxSeries f1;      // cbrt(E1^2 E2), rational coefficients, 3-power denominators
  PuiseuxSeries f2;      // cbrt(E1 E2^2)
  PuiseuxSeries f_plus;  // f1 + i f2
  PuiseuxSeries f_minus; // f1 - i f2
};

// Basis of the weight 3 cusp forms on the grid q^{1/15}, retained through at
// least index `trunc`.
CuspFormBasis cusp_forms_gamma(i64 trunc);

// sqrt(E1 E2) on the grid q^{1/10}, coefficients in Z[1/2], retained through
// at least index `trunc`.
PuiseuxSeries cusp_form_gamma2(i64 trunc);

// Hauptmodul t = f1/f2 on the grid q^{1/15}; leading exponent -1/15.
PuiseuxSeries hauptmodul(i64 trunc);

}  // namespace asdv
