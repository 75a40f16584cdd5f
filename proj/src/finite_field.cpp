#include "asdv/finite_field.hpp"

namespace asdv {

FiniteField::FiniteField(i64 p, int degree) : p_(p), degree_(degree) {
  if (p == 2 || p == 3)
    throw ArgumentError("FiniteField: characteristic " + std::to_string(p) + " is unsupported");
  if (p < 5 || !is_probable_prime(BigInt(p)))
    throw ArgumentError("FiniteField: p = " + std::to_string(p) + " is not prime");
  if (degree != 1 && degree != 2) throw ArgumentError("FiniteField: degree must be 1 or 2");
  chi_table_.assign(p_, -1);
  chi_table_[0] = 0;
  for (i64 x = 1; x < p_; ++x) chi_table_[x * x % p_] = 1;
  if (degree_ == 2) {
    for (i64 c = 2; c < p_; ++c) {
      if (chi_table_[c] == -1) {
        nonres_ = c;
        break;
      }
    }
  }
}

}  // namespace asdv
