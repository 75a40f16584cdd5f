#pragma once

#include <array>
#include <string>
#include <vector>

#include "asdv/count_cache.hpp"
#include "asdv/gaussian.hpp"
#include "asdv/weierstrass.hpp"

namespace asdv {

// Frobenius data at a prime p for the g1515 family: the degree-4 integral
// characteristic polynomial assembled from the trace sums, and its quadratic
// factor over Z[i].
struct FrobeniusData {
  i64 p = 0;
  i64 tr_p = 0;
  i64 tr_p2 = 0;
  i64 c1 = 0;  // = tr_p
  i64 c2 = 0;  // = (c1^2 - tr_p2) / 2
  // T^4 - c1 T^3 + c2 T^2 - p^2 c1 T + p^4, coefficients low to high.
  std::array<i64, 5> hp{};
  int chi_m3 = 0;  // character value fixing the constant term of the quadratic factor

  // Trace candidates for the quadratic factor T^2 - beta T + chi_m3 p^2 over
  // Z[i]: a single real beta when p = 1 mod 3, a conjugate pair +-Bi (sign
  // initially undetermined) when p = 2 mod 3.
  std::vector<GaussianRational> beta_candidates;
  bool sign_resolved = false;
  GaussianRational beta;  // valid once sign_resolved

  std::string hp_str() const;
  std::string hp_prime_str(bool resolved_sign) const;
};

// Fills traces (through the optional count cache), c1, c2 and hp; the
// factorization fields are left for factor_over_qi.
FrobeniusData build_frobenius_data(const WeierstrassFamily& fam, i64 p,
                                   CountCache* cache = nullptr);

// Splits hp into conjugate quadratics over Z[i] with constant term forced to
// chi_{-3}(p) p^2.  For p = 1 mod 3 the trace is unique and the sign is
// resolved; for p = 2 mod 3 two conjugate candidates remain.
void factor_over_qi(FrobeniusData& data);

}  // namespace asdv
