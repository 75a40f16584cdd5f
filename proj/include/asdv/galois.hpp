#pragma once

#include <string>
#include <vector>

#include "asdv/charpoly.hpp"
#include "asdv/numeric.hpp"

namespace asdv {

// Polynomial over Z/p, coefficients low to high, normalized to [0, p).
struct PolynomialModP {
  i64 p = 0;
  std::vector<i64> c;

  static PolynomialModP reduce(i64 p, const std::vector<i64>& coeffs);
  int degree() const { return static_cast<int>(c.size()) - 1; }
};

// True iff gcd(f, f') is constant.
bool squarefree_mod_p(const PolynomialModP& f);

// Degrees of the irreducible factors (ascending, with multiplicity one each
// since the input must be squarefree), via distinct-degree factorization.
// For a squarefree reduction this is the cycle type of Frobenius.
std::vector<int> frobenius_cycle_type(const PolynomialModP& f);

// Discriminant of an integer polynomial via the resultant of f and f'.
BigInt polynomial_discriminant(const std::vector<BigInt>& coeffs);

// H'_p reduced modulo the prime (1+i) of Z[i]: T^2 + (beta mod (1+i)) T + 1
// over F_2, returned as the coefficient triple {1, t_coeff, 1}.  The sign
// ambiguity at p = 2 mod 3 is invisible mod (1+i).
std::array<int, 3> mod_lambda_charpoly(const FrobeniusData& data);

struct QuarticRow {
  std::vector<BigInt> poly;       // integer coefficients, low to high
  std::string poly_str;
  BigInt discriminant;
  std::vector<i64> order4_primes; // p with a 4-cycle Frobenius
  std::vector<std::pair<i64, std::vector<int>>> cycle_types;  // per prime
};

struct DeviationProbe {
  std::vector<QuarticRow> quartics;
  // Primes p <= 31 (p != 2, 3) whose quadratic-factor trace is odd, i.e.
  // whose mod-(1+i) image has order 3.
  std::vector<i64> odd_trace_primes;
  // For each quadratic field label d: the odd-trace primes inert in Q(sqrt d).
  std::vector<std::pair<i64, std::vector<i64>>> inert_odd_trace;
};

// The finite data eliminating the possible deviation groups: cycle types of
// the three quartic resolvents at the given primes, and the odd-trace primes
// inert in each auxiliary quadratic field.
DeviationProbe deviation_probe(const std::vector<i64>& primes,
                               const std::vector<FrobeniusData>& table);

// The three quartic fields with S4 Galois closure containing the cubic
// resolvent field and unramified outside 2 and 3.
std::vector<std::vector<BigInt>> quartic_resolvents();

// x^3 + 3x - 2, whose splitting field realizes the mod-(1+i) image.
std::vector<BigInt> resolvent_cubic();

}  // namespace asdv
