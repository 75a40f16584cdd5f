#pragma once

#include <map>
#include <string>

#include "asdv/characters.hpp"
#include "asdv/gaussian.hpp"

namespace asdv {

// Coefficient sequence of a weight 3 newform, seeded with the prime values of
// its q-expansion and extended to all indices by multiplicativity and the
// prime-power Hecke recursion
//   a_{p^{r+1}} = a_p a_{p^r} - chi(p) p^2 a_{p^{r-1}}   (p not dividing N),
//   a_{p^{r+1}} = a_p a_{p^r}                            (p dividing N).
class NewformCoefficients {
 public:
  // "g+", "g-": the conjugate weight 3 level 27 CM eigenforms with character
  // attached to Q(sqrt(-3)); "g2": the weight 3 level 16 form with character
  // attached to Q(sqrt(-1)).  Prime values are seeded through p = 31.
  static NewformCoefficients from_table(const std::string& label);

  const std::string& label() const { return label_; }
  i64 level() const { return level_; }
  const QuadraticCharacter& character() const { return chi_; }

  // a_p; throws if p is prime but unseeded.
  GaussianRational prime_value(i64 p) const;
  bool has_prime_value(i64 p) const { return prime_values_.count(p) != 0; }

  // a_n for any n >= 1 whose prime factors are all seeded.
  GaussianRational coeff(i64 n) const;

 private:
  NewformCoefficients(std::string label, i64 level, QuadraticCharacter chi)
      : label_(std::move(label)), level_(level), chi_(chi) {}

  GaussianRational prime_power_value(i64 p, int r) const;

  std::string label_;
  i64 level_;
  QuadraticCharacter chi_;
  std::map<i64, GaussianRational> prime_values_;
};

}  // namespace asdv
