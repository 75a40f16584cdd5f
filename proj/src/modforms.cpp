#include "asdv/modforms.hpp"

#include <vector>

#include "asdv/errors.hpp"

namespace asdv {

namespace {

// sigma[j][l] = sum of v^2 over divisors v of l with v = j mod 5, as a sieve.
std::array<std::vector<long long>, 5> divisor_power_sums(i64 trunc) {
  std::array<std::vector<long long>, 5> sigma;
  for (auto& s : sigma) s.assign(trunc + 1, 0);
  for (i64 v = 1; v <= trunc; ++v) {
    long long v2 = static_cast<long long>(v) * v;
    int r = static_cast<int>(v % 5);
    for (i64 l = v; l <= trunc; l += v) sigma[r][l] += v2;
  }
  return sigma;
}

}  // namespace

PuiseuxSeries eisenstein_e1(i64 trunc) {
  if (trunc < 1) throw ArgumentError("eisenstein_e1: truncation must be >= 1");
  auto sigma = divisor_power_sums(trunc);
  std::vector<GaussianRational> c(trunc + 1);
  c[0] = GaussianRational(1);
  for (i64 l = 1; l <= trunc; ++l) {
    // -(1/2) [ 2 sum v^2 (chi3+chi4)(v) + i sum v^2 (chi4-chi3)(v) ]
    // with (chi3+chi4)(v) = 2, 0, 0, -2 and i(chi4-chi3)(v) = 0, 2, -2, 0
    // at v = 1, 2, 3, 4 mod 5.
    long long val = -(2 * (sigma[1][l] - sigma[4][l]) + (sigma[2][l] - sigma[3][l]));
    c[l] = GaussianRational(BigRational(static_cast<long>(val)));
  }
  return PuiseuxSeries::from_coeffs(5, 0, std::move(c));
}

PuiseuxSeries eisenstein_e2(i64 trunc) {
  if (trunc < 1) throw ArgumentError("eisenstein_e2: truncation must be >= 1");
  auto sigma = divisor_power_sums(trunc);
  std::vector<GaussianRational> c(trunc + 1);
  for (i64 l = 1; l <= trunc; ++l) {
    // (1/2) [ sum v^2 (chi3+chi4)(v) + 2i sum v^2 (chi3-chi4)(v) ]
    // with 2i(chi3-chi4)(v) = -4, 4 at v = 2, 3 mod 5.
    long long val = (sigma[1][l] - sigma[4][l]) - 2 * (sigma[2][l] - sigma[3][l]);
    c[l] = GaussianRational(BigRational(static_cast<long>(val)));
  }
  return PuiseuxSeries::from_coeffs(5, 0, std::move(c));
}

CuspFormBasis cusp_forms_gamma(i64 trunc) {
  // Cube roots lose two grid steps; build the Eisenstein inputs with margin.
  i64 e_trunc = (trunc + 5) / 3 + 2;
  PuiseuxSeries e1 = eisenstein_e1(e_trunc);
  PuiseuxSeries e2 = eisenstein_e2(e_trunc);
  CuspFormBasis basis{
      (e1 * e1 * e2).nth_root(3),
      (e1 * e2 * e2).nth_root(3),
      PuiseuxSeries(),
      PuiseuxSeries(),
  };
  basis.f_plus = basis.f1 + basis.f2.scaled(GaussianRational::unit_i());
  basis.f_minus = basis.f1 - basis.f2.scaled(GaussianRational::unit_i());
  return basis;
}

PuiseuxSeries cusp_form_gamma2(i64 trunc) {
  i64 e_trunc = (trunc + 3) / 2 + 2;
  PuiseuxSeries e1 = eisenstein_e1(e_trunc);
  PuiseuxSeries e2 = eisenstein_e2(e_trunc);
  return (e1 * e2).nth_root(2);
}

PuiseuxSeries hauptmodul(i64 trunc) {
  CuspFormBasis basis = cusp_forms_gamma(trunc + 4);
  return basis.f1 / basis.f2;
}

}  // namespace asdv
