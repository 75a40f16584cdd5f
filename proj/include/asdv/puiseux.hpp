#pragma once

#include <optional>
#include <string>
#include <vector>

#include "asdv/gaussian.hpp"
#include "asdv/numeric.hpp"

namespace asdv {

// Truncated formal expansion sum_n c_n q^{n/N} over Q(i).
//
// Coefficients are stored densely for absolute indices lead()..truncation();
// indices below lead() are exactly zero, indices above truncation() are
// unknown and reading them raises CoverageError.  Proper modular forms have
// lead() >= 0; a negative lead() arises only as the explicit offset of a
// division result.
class PuiseuxSeries {
 public:
  PuiseuxSeries() : ram_(1), lead_(0), c_(1) {}

  static PuiseuxSeries zero(i64 ram, i64 trunc);
  static PuiseuxSeries one(i64 ram, i64 trunc);
  // c * q^{index/ram}, known through q^{trunc/ram}.
  static PuiseuxSeries monomial(const GaussianRational& c, i64 index, i64 ram, i64 trunc);
  // Coefficients for absolute indices lead, lead+1, ...
  static PuiseuxSeries from_coeffs(i64 ram, i64 lead, std::vector<GaussianRational> coeffs);

  i64 ramification() const { return ram_; }
  i64 lead() const { return lead_; }
  i64 truncation() const { return lead_ + static_cast<i64>(c_.size()) - 1; }

  // Coefficient of q^{n/ramification()}.
  const GaussianRational& coeff(i64 n) const;

  bool is_zero() const;
  // Lowest index with nonzero coefficient, if any within the known range.
  std::optional<i64> order() const;

  // Same series on the grid q^{1/(ram*factor)}.
  PuiseuxSeries rescaled(i64 factor) const;
  // Restrict the known range to indices <= new_trunc.
  PuiseuxSeries truncated(i64 new_trunc) const;

  PuiseuxSeries operator-() const;
  PuiseuxSeries scaled(const GaussianRational& c) const;
  PuiseuxSeries conjugated() const;
  PuiseuxSeries pow(unsigned e) const;

  // Branch normalization: the leading coefficient of the result is the
  // positive real n-th root of the leading coefficient (which must be a
  // rational n-th power).  If the leading exponent is not divisible by n the
  // ramification is extended by the needed factor, visible on the result.
  PuiseuxSeries nth_root(unsigned n) const;

  friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator/(const PuiseuxSeries& a, const PuiseuxSeries& b);

 private:
  i64 ram_;
  i64 lead_;
  std::vector<GaussianRational> c_;
};

// Rescale both series to their common ramification grid.
std::pair<PuiseuxSeries, PuiseuxSeries> align(const PuiseuxSeries& a, const PuiseuxSeries& b);

// Coefficientwise equality for all indices <= n on the common grid (n in
// units of the common ramification).
bool agree_through(const PuiseuxSeries& a, const PuiseuxSeries& b, i64 n);

}  // namespace asdv
